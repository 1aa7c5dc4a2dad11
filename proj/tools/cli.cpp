#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <random>
#include <sstream>

#include "sfkit/families.hpp"
#include "sfkit/io.hpp"
#include "sfkit/svg.hpp"

namespace sfkit {

namespace {

std::vector<double> parse_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        out.push_back(std::stod(item, &pos));
    }
    return out;
}

std::string label_lines(const ULabel& lab) {
    std::string out = "n = " + std::to_string(lab.n()) + "\nu =";
    for (double v : lab.values()) out += " " + format_double(v);
    out += "\ns =";
    for (double v : lab.values()) out += " " + format_double(1.0 - v);
    out += "\n";
    return out;
}

std::string class_string(const FlowerClass& c) {
    switch (c.kind) {
        case FlowerClass::Univalent: return "univalent";
        case FlowerClass::UnBranched: return "unbranched";
        default: return "branched:" + std::to_string(c.degree);
    }
}

void write_outputs(const NormalizedFlower& fl, const std::string& out_path,
                   const std::string& svg_path, bool annotate) {
    if (!out_path.empty()) {
        FlowerFile f = FlowerFile::from_flower(fl, class_string(classify_flower(fl)));
        write_flower_file_path(out_path, f);
    }
    if (!svg_path.empty()) {
        SvgOptions o;
        o.annotate = annotate;
        std::ofstream s(svg_path, std::ios::binary);
        if (!s) throw Error("cannot write '" + svg_path + "'");
        s << render_svg(fl, o);
    }
}

NormalizedFlower flower_from_label(int n, const std::vector<double>& u) {
    if (static_cast<int>(u.size()) == n - 3) return layout_flower(n, u);
    if (static_cast<int>(u.size()) == n) {
        std::vector<double> params(u.begin() + 1, u.begin() + (n - 2));
        NormalizedFlower fl = layout_flower(n, params);
        // Keep the caller's full label; the layout must agree with it.
        fl.label = ULabel(u);
        return fl;
    }
    throw Error("expected n-3 parameters or a full n-entry label");
}

NormalizedFlower flower_from_file(const std::string& path) {
    FlowerFile f = read_flower_file_path(path);
    return flower_from_label(f.n, f.u);
}

EdgeLabel make_pack_labels(const TriComplex& K, const std::string& selector) {
    if (selector == "auto:unbranched") {
        SoccerballPair p = soccerball_labels(false);
        return soccerball_edge_label(K, p.s, p.s_prime);
    }
    if (selector == "auto:branched") {
        SoccerballPair p = soccerball_labels(true);
        return soccerball_edge_label(K, p.s, p.s_prime);
    }
    if (selector.rfind("auto:cone=", 0) == 0) {
        double s = std::stod(selector.substr(10));
        double u = 1.0 - s;
        return soccerball_edge_label(K, s, 1.0 - 1.0 / u);
    }
    return read_label_file_path(selector);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"schwarzian circle-packing toolkit"};
    app.require_subcommand(1);

    // layout
    auto* layout_cmd = app.add_subcommand("layout", "lay out a normalized flower from u parameters");
    int n = 0;
    std::string u_str, s_str, out_path, svg_path, file_path;
    bool annotate = false;
    layout_cmd->add_option("--n", n, "number of petals")->required();
    layout_cmd->add_option("--u", u_str, "comma list of n-3 u parameters")->required();
    layout_cmd->add_option("--out", out_path, "flower file to write");
    layout_cmd->add_option("--svg", svg_path, "SVG file to write");
    layout_cmd->add_flag("--annotate", annotate, "annotate tangencies and radii in the SVG");

    // label verify / complete
    auto* label_cmd = app.add_subcommand("label", "packing label operations");
    label_cmd->require_subcommand(1);
    auto* verify_cmd = label_cmd->add_subcommand("verify", "check the flower closure conditions");
    verify_cmd->add_option("--file", file_path, "flower file holding the label");
    verify_cmd->add_option("--n", n, "number of petals");
    verify_cmd->add_option("--s", s_str, "comma list of n schwarzians");
    auto* complete_cmd = label_cmd->add_subcommand("complete", "complete n-3 parameters to a full label");
    complete_cmd->add_option("--n", n, "number of petals")->required();
    complete_cmd->add_option("--u", u_str, "comma list of n-3 u parameters")->required();

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "univalent / un-branched / branched verdict");
    classify_cmd->add_option("--file", file_path, "flower file");
    classify_cmd->add_option("--n", n, "number of petals");
    classify_cmd->add_option("--u", u_str, "u parameters (n-3) or full label (n)");

    // family
    auto* family_cmd = app.add_subcommand("family", "closed-form flower families");
    family_cmd->require_subcommand(1);
    int wrap = 1;
    double u1 = 0, u2 = 0, ra = 0, rb = 0;
    bool branched = false;
    auto* uniform_cmd = family_cmd->add_subcommand("uniform", "constant-label flower");
    uniform_cmd->add_option("--n", n, "petal count")->required();
    uniform_cmd->add_option("--wrap", wrap, "wrap count");
    uniform_cmd->add_option("--out", out_path, "flower file to write");
    uniform_cmd->add_option("--svg", svg_path, "SVG file to write");
    auto* extremal_cmd = family_cmd->add_subcommand("extremal", "extremal univalent flower");
    extremal_cmd->add_option("--n", n, "petal count")->required();
    extremal_cmd->add_option("--out", out_path, "flower file to write");
    extremal_cmd->add_option("--svg", svg_path, "SVG file to write");
    auto* doyle_cmd = family_cmd->add_subcommand("doyle", "period-3 hex flower");
    doyle_cmd->add_option("--u1", u1, "first label parameter");
    doyle_cmd->add_option("--u2", u2, "second label parameter");
    doyle_cmd->add_option("--a", ra, "first radius parameter");
    doyle_cmd->add_option("--b", rb, "second radius parameter");
    doyle_cmd->add_option("--out", out_path, "flower file to write");
    doyle_cmd->add_option("--svg", svg_path, "SVG file to write");
    auto* ring_cmd = family_cmd->add_subcommand("ring", "nested ring flower");
    ring_cmd->add_option("--n", n, "petal count")->required();
    ring_cmd->add_option("--out", out_path, "flower file to write");
    ring_cmd->add_option("--svg", svg_path, "SVG file to write");
    auto* soccer_cmd = family_cmd->add_subcommand("soccerball", "the two soccerball schwarzians");
    soccer_cmd->add_flag("--branched", branched, "simply branched packing values");

    // pack
    auto* pack_cmd = app.add_subcommand("pack", "lay out a whole complex from edge schwarzians");
    std::string complex_str, labels_str;
    int root_face = 0;
    bool report = false;
    pack_cmd->add_option("--complex", complex_str, "'soccerball' or a complex file")->required();
    pack_cmd->add_option("--labels", labels_str,
                         "auto:unbranched | auto:branched | auto:cone=<s> | label file")
        ->required();
    pack_cmd->add_option("--root", root_face, "root face for the dual spanning tree");
    pack_cmd->add_flag("--report", report, "print per-edge holonomy and angle sums");
    pack_cmd->add_option("--svg", svg_path, "SVG of the layout");

    // random-flower
    auto* random_cmd = app.add_subcommand("random-flower", "seeded random flower from radii");
    std::uint64_t seed = 0;
    random_cmd->add_option("--n", n, "petal count")->required();
    random_cmd->add_option("--seed", seed, "random seed")->required();
    random_cmd->add_option("--out", out_path, "flower file to write");
    random_cmd->add_option("--svg", svg_path, "SVG file to write");

    // render
    auto* render_cmd = app.add_subcommand("render", "render a flower file to SVG");
    bool no_dots = false;
    render_cmd->add_option("--file", file_path, "flower file")->required();
    render_cmd->add_option("--svg", svg_path, "SVG file to write")->required();
    render_cmd->add_flag("--annotate", annotate, "annotate tangencies and radii");
    render_cmd->add_flag("--no-dots", no_dots, "omit tangency dots");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (*layout_cmd) {
            NormalizedFlower fl = layout_flower(n, parse_list(u_str));
            out << label_lines(fl.label);
            write_outputs(fl, out_path, svg_path, annotate);
            return 0;
        }
        if (*verify_cmd) {
            std::vector<double> s;
            if (!file_path.empty()) {
                FlowerFile f = read_flower_file_path(file_path);
                for (double uv : f.u) s.push_back(1.0 - uv);
            } else if (!s_str.empty()) {
                s = parse_list(s_str);
            } else {
                err << "error: label verify needs --file or --s\n";
                return 1;
            }
            LabelVerdict v = verify_packing_label(s);
            out << v.describe() << "\n";
            return v.valid ? 0 : 2;
        }
        if (*complete_cmd) {
            out << label_lines(complete_label(n, parse_list(u_str)));
            return 0;
        }
        if (*classify_cmd) {
            NormalizedFlower fl = file_path.empty() ? flower_from_label(n, parse_list(u_str))
                                                    : flower_from_file(file_path);
            FlowerClass c = classify_flower(fl);
            out << class_string(c) << "\n";
            for (const std::string& v : c.violations) out << "violation: " << v << "\n";
            return 0;
        }
        if (*uniform_cmd) {
            NormalizedFlower fl = uniform_flower(n, wrap);
            out << "s = " << format_double(uniform_schwarzian(n, wrap)) << "\n";
            out << label_lines(fl.label);
            write_outputs(fl, out_path, svg_path, annotate);
            return 0;
        }
        if (*extremal_cmd) {
            ULabel lab = extremal_label(n);
            out << label_lines(lab);
            if (n >= 4) {
                std::vector<double> params(lab.values().begin() + 1, lab.values().begin() + (n - 2));
                write_outputs(layout_flower(n, params), out_path, svg_path, annotate);
            }
            return 0;
        }
        if (*doyle_cmd) {
            if (ra > 0 && rb > 0) {
                RadiiFlower rf = flower_from_radii(doyle_radii(ra, rb));
                out << "center_radius = " << format_double(rf.center_radius) << "\n";
                out << label_lines(rf.flower.label);
                write_outputs(rf.flower, out_path, svg_path, annotate);
            } else {
                ULabel lab = doyle_label(u1, u2);
                out << label_lines(lab);
                std::vector<double> params(lab.values().begin() + 1, lab.values().begin() + 4);
                write_outputs(layout_flower(6, params), out_path, svg_path, annotate);
            }
            return 0;
        }
        if (*ring_cmd) {
            NormalizedFlower fl = ring_flower(n);
            out << label_lines(fl.label);
            write_outputs(fl, out_path, svg_path, annotate);
            return 0;
        }
        if (*soccer_cmd) {
            SoccerballPair p = soccerball_labels(branched);
            out << "s = " << format_double(p.s) << "\ns' = " << format_double(p.s_prime) << "\n";
            return 0;
        }
        if (*pack_cmd) {
            TriComplex K = complex_str == "soccerball" ? soccerball_complex()
                                                       : read_complex_file_path(complex_str);
            EdgeLabel lab = make_pack_labels(K, labels_str);
            PackingLayout L = layout_complex(K, lab, base_face_f(), root_face);
            out << "faces = " << K.face_count() << "\n";
            out << "max_holonomy = " << format_double(L.max_holonomy()) << "\n";
            if (report) {
                for (const auto& h : L.holonomy)
                    out << "edge " << K.edges[h.edge].v << "-" << K.edges[h.edge].w << " : "
                        << format_double(h.discrepancy) << "\n";
                for (int v = 0; v < K.V; ++v) {
                    if (!K.interior_vertex(v)) continue;
                    out << "angle_sum " << v << " = " << format_double(angle_sum(L, v)) << "\n";
                }
            }
            if (!svg_path.empty()) {
                std::ofstream s(svg_path, std::ios::binary);
                if (!s) throw Error("cannot write '" + svg_path + "'");
                s << render_svg(L);
            }
            return 0;
        }
        if (*random_cmd) {
            std::mt19937_64 rng(seed);
            RadiiFlower rf = flower_from_radii(random_radii(n, rng));
            out << label_lines(rf.flower.label);
            write_outputs(rf.flower, out_path, svg_path, annotate);
            return 0;
        }
        if (*render_cmd) {
            NormalizedFlower fl = flower_from_file(file_path);
            SvgOptions o;
            o.annotate = annotate;
            o.dots = !no_dots;
            std::ofstream s(svg_path, std::ios::binary);
            if (!s) throw Error("cannot write '" + svg_path + "'");
            s << render_svg(fl, o);
            return 0;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "error: no subcommand\n";
    return 1;
}

}  // namespace sfkit

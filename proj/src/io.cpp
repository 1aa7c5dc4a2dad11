#include "sfkit/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace sfkit {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {

std::vector<double> parse_double_list(const std::string& s, const char* what) {
    std::vector<double> out;
    std::string item;
    std::stringstream ss(s);
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            out.push_back(std::stod(item, &pos));
        } catch (const std::exception&) {
            throw ParseError(std::string("bad number in ") + what + ": '" + item + "'");
        }
    }
    return out;
}

std::string list_to_string(const std::vector<double>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += format_double(v[i]);
    }
    return s;
}

// "key=value" lines; returns false at EOF or a non-matching line.
bool next_field(std::istream& in, std::string& key, std::string& value) {
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError("expected key=value line: '" + line + "'");
        key = line.substr(0, eq);
        value = line.substr(eq + 1);
        return true;
    }
    return false;
}

void expect_header(std::istream& in, const std::string& header) {
    std::string line;
    if (!std::getline(in, line) || line != header)
        throw ParseError("missing header '" + header + "'");
}

}  // namespace

FlowerFile FlowerFile::from_flower(const NormalizedFlower& fl, const std::string& cls) {
    FlowerFile f;
    f.n = fl.n;
    f.u = fl.label.values();
    bool finite = true;
    for (int j = 1; j < fl.n; ++j)
        if (fl.petals[j].half_plane) finite = false;
    if (finite) {
        for (int j = 1; j < fl.n; ++j) {
            f.t.push_back(fl.petals[j].t);
            f.r.push_back(fl.petals[j].r);
        }
    }
    f.cls = cls;
    return f;
}

std::string write_flower_file(const FlowerFile& f) {
    std::string out = "sfkit-flower v1\n";
    out += "n=" + std::to_string(f.n) + "\n";
    out += "u=" + list_to_string(f.u) + "\n";
    if (!f.t.empty()) out += "t=" + list_to_string(f.t) + "\n";
    if (!f.r.empty()) out += "r=" + list_to_string(f.r) + "\n";
    if (!f.cls.empty()) out += "class=" + f.cls + "\n";
    return out;
}

FlowerFile read_flower_file(std::istream& in) {
    expect_header(in, "sfkit-flower v1");
    FlowerFile f;
    std::string key, value;
    while (next_field(in, key, value)) {
        if (key == "n")
            f.n = std::stoi(value);
        else if (key == "u")
            f.u = parse_double_list(value, "u");
        else if (key == "t")
            f.t = parse_double_list(value, "t");
        else if (key == "r")
            f.r = parse_double_list(value, "r");
        else if (key == "class")
            f.cls = value;
        else
            throw ParseError("unknown flower field '" + key + "'");
    }
    if (f.n < 3) throw ParseError("flower file: bad n");
    if (static_cast<int>(f.u.size()) != f.n) throw ParseError("flower file: u has wrong length");
    if (!f.t.empty() && static_cast<int>(f.t.size()) != f.n - 1)
        throw ParseError("flower file: t has wrong length");
    if (!f.r.empty() && static_cast<int>(f.r.size()) != f.n - 1)
        throw ParseError("flower file: r has wrong length");
    return f;
}

std::string write_complex_file(const TriComplex& K) {
    std::string out = "sfkit-complex v1\n";
    out += "V=" + std::to_string(K.V) + "\n";
    for (const auto& f : K.faces)
        out += std::to_string(f[0]) + " " + std::to_string(f[1]) + " " + std::to_string(f[2]) + "\n";
    return out;
}

TriComplex read_complex_file(std::istream& in) {
    expect_header(in, "sfkit-complex v1");
    std::string line;
    if (!std::getline(in, line) || line.rfind("V=", 0) != 0)
        throw ParseError("complex file: missing V=");
    int V = std::stoi(line.substr(2));
    std::vector<std::array<int, 3>> faces;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::array<int, 3> f;
        if (!(ss >> f[0] >> f[1] >> f[2])) throw ParseError("complex file: bad face line '" + line + "'");
        faces.push_back(f);
    }
    TriComplex K = build_complex(faces);
    if (K.V > V) throw ParseError("complex file: face indices exceed V");
    // Declared vertices beyond the faces are isolated boundary vertices.
    K.degree.resize(V, 0);
    K.boundary_vertex.resize(V, true);
    K.star_petals.resize(V);
    K.star_faces.resize(V);
    K.V = V;
    return K;
}

std::string write_label_file(const TriComplex& K, const EdgeLabel& label) {
    std::string out = "sfkit-labels v1\n";
    for (std::size_t i = 0; i < K.edges.size(); ++i) {
        const auto& e = K.edges[i];
        if (!K.interior_edge(static_cast<int>(i))) continue;
        if (!label.has(e.v, e.w)) continue;
        out += std::to_string(e.v) + " " + std::to_string(e.w) + " " +
               format_double(label.get(e.v, e.w)) + "\n";
    }
    return out;
}

EdgeLabel read_label_file(std::istream& in) {
    expect_header(in, "sfkit-labels v1");
    EdgeLabel lab;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        int v, w;
        double s;
        if (!(ss >> v >> w >> s)) throw ParseError("label file: bad line '" + line + "'");
        lab.set(v, w, s);
    }
    return lab;
}

namespace {

template <typename T, typename F>
T read_path(const std::string& path, F reader) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    return reader(in);
}

void write_path(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    out << content;
}

}  // namespace

FlowerFile read_flower_file_path(const std::string& path) {
    return read_path<FlowerFile>(path, [](std::istream& in) { return read_flower_file(in); });
}
void write_flower_file_path(const std::string& path, const FlowerFile& f) {
    write_path(path, write_flower_file(f));
}
TriComplex read_complex_file_path(const std::string& path) {
    return read_path<TriComplex>(path, [](std::istream& in) { return read_complex_file(in); });
}
void write_complex_file_path(const std::string& path, const TriComplex& K) {
    write_path(path, write_complex_file(K));
}
EdgeLabel read_label_file_path(const std::string& path) {
    return read_path<EdgeLabel>(path, [](std::istream& in) { return read_label_file(in); });
}
void write_label_file_path(const std::string& path, const TriComplex& K, const EdgeLabel& label) {
    write_path(path, write_label_file(K, label));
}

}  // namespace sfkit

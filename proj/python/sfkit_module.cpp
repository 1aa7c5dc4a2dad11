#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sfkit/families.hpp"
#include "sfkit/io.hpp"
#include "sfkit/svg.hpp"

namespace py = pybind11;
using namespace sfkit;

namespace {

std::string class_string(const FlowerClass& c) {
    switch (c.kind) {
        case FlowerClass::Univalent: return "univalent";
        case FlowerClass::UnBranched: return "unbranched";
        default: return "branched:" + std::to_string(c.degree);
    }
}

}  // namespace

PYBIND11_MODULE(_sfkit, m) {
    m.doc() = "discrete schwarzian / circle-packing flower toolkit";

    py::register_exception<Error>(m, "SfkitError");

    py::class_<NormalizedFlower>(m, "NormalizedFlower")
        .def_readonly("n", &NormalizedFlower::n)
        .def_property_readonly("u",
                               [](const NormalizedFlower& f) { return f.label.values(); })
        .def_property_readonly("s",
                               [](const NormalizedFlower& f) { return f.label.schwarzians(); })
        .def("tangencies",
             [](const NormalizedFlower& f) {
                 std::vector<double> t;
                 for (int j = 1; j < f.n; ++j)
                     t.push_back(f.petals[j].half_plane
                                     ? std::numeric_limits<double>::infinity()
                                     : f.petals[j].t);
                 return t;
             })
        .def("radii",
             [](const NormalizedFlower& f) {
                 std::vector<double> r;
                 for (int j = 1; j < f.n; ++j)
                     r.push_back(f.petals[j].half_plane
                                     ? std::numeric_limits<double>::infinity()
                                     : f.petals[j].r);
                 return r;
             })
        .def("wrap_count", [](const NormalizedFlower& f) { return wrap_count(f); })
        .def("classify",
             [](const NormalizedFlower& f) { return class_string(classify_flower(f)); })
        .def("svg", [](const NormalizedFlower& f) { return render_svg(f); });

    m.def("layout_flower",
          [](int n, const std::vector<double>& u) { return layout_flower(n, u); },
          py::arg("n"), py::arg("u"), "normalized flower layout from n-3 u parameters");
    m.def("complete_label",
          [](int n, const std::vector<double>& u) { return complete_label(n, u).values(); },
          py::arg("n"), py::arg("u"));
    m.def("verify_packing_label",
          [](const std::vector<double>& s) {
              LabelVerdict v = verify_packing_label(s);
              return py::make_tuple(v.valid, v.describe());
          },
          py::arg("s"));
    m.def("flower_from_radii",
          [](const std::vector<double>& radii, int wrap) {
              RadiiFlower rf = flower_from_radii(radii, wrap);
              return py::make_tuple(rf.center_radius, rf.flower);
          },
          py::arg("radii"), py::arg("wrap") = 1);

    m.def("uniform_schwarzian", &uniform_schwarzian, py::arg("n"), py::arg("wrap") = 1);
    m.def("uniform_flower", &uniform_flower, py::arg("n"), py::arg("wrap") = 1);
    m.def("extremal_label", [](int n) { return extremal_label(n).values(); }, py::arg("n"));
    m.def("doyle_label",
          [](double u1, double u2) { return doyle_label(u1, u2).values(); }, py::arg("u1"),
          py::arg("u2"));
    m.def("doyle_radii", &doyle_radii, py::arg("a"), py::arg("b"));
    m.def("ring_label", [](int n) { return ring_label(n).values(); }, py::arg("n"));
    m.def("ring_tangencies", [](int k) {
        std::vector<std::pair<long long, long long>> out;
        for (const Rational& r : ring_tangencies(k)) out.emplace_back(r.num, r.den);
        return out;
    });
    m.def("soccerball_labels", [](bool branched) {
        SoccerballPair p = soccerball_labels(branched);
        return py::make_tuple(p.s, p.s_prime);
    });

    m.def("soccerball_pack",
          [](double s, double s_prime) {
              TriComplex K = soccerball_complex();
              EdgeLabel lab = soccerball_edge_label(K, s, s_prime);
              PackingLayout L = layout_complex(K, lab, base_face_f());
              std::vector<double> angles;
              for (int v = 0; v < K.V; ++v) angles.push_back(angle_sum(L, v));
              py::dict d;
              d["vertices"] = K.V;
              d["faces"] = K.face_count();
              d["max_holonomy"] = L.max_holonomy();
              d["angle_sums"] = angles;
              d["degrees"] = K.degree;
              return d;
          },
          py::arg("s"), py::arg("s_prime"),
          "lay out the soccerball complex and report holonomy and angle sums");
}

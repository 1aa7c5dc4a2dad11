#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "sfkit/complexpack.hpp"

namespace sfkit {

struct ParseError : Error { using Error::Error; };

/// Contents of a flower file: header `sfkit-flower v1`, then `n=<int>`,
/// `u=<comma list>`, optional `t=`, `r=` (petals 1..n-1) and `class=`.
/// Plain text, LF newlines, floats printed with 17 significant digits.
struct FlowerFile {
    int n = 0;
    std::vector<double> u;              // full cyclic label
    std::vector<double> t;              // optional; tangencies of petals 1..n-1
    std::vector<double> r;              // optional; radii of petals 1..n-1
    std::string cls;                    // optional classification string

    static FlowerFile from_flower(const NormalizedFlower& fl, const std::string& cls = "");
};

std::string write_flower_file(const FlowerFile& f);
FlowerFile read_flower_file(std::istream& in);
FlowerFile read_flower_file_path(const std::string& path);
void write_flower_file_path(const std::string& path, const FlowerFile& f);

/// Complex file: header `sfkit-complex v1`, `V=<int>`, one face per line.
std::string write_complex_file(const TriComplex& K);
TriComplex read_complex_file(std::istream& in);
TriComplex read_complex_file_path(const std::string& path);
void write_complex_file_path(const std::string& path, const TriComplex& K);

/// Label file: header `sfkit-labels v1`, lines `v w s`.
std::string write_label_file(const TriComplex& K, const EdgeLabel& label);
EdgeLabel read_label_file(std::istream& in);
EdgeLabel read_label_file_path(const std::string& path);
void write_label_file_path(const std::string& path, const TriComplex& K, const EdgeLabel& label);

/// 17-significant-digit decimal form that round-trips doubles exactly.
std::string format_double(double x);

}  // namespace sfkit

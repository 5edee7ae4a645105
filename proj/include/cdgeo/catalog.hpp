#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "cdgeo/degeneration.hpp"

namespace cdgeo {

// Named algebras in insertion order.
class Catalog {
public:
    Catalog() = default;
    explicit Catalog(std::vector<Algebra> algebras);

    // Replaces an existing entry of the same name.
    void add(Algebra a);
    const Algebra* find(std::string_view name) const;
    // Throws Error("unknown algebra 'X'").
    const Algebra& at(std::string_view name) const;
    const std::vector<Algebra>& algebras() const& { return algebras_; }
    std::vector<Algebra> algebras() && { return std::move(algebras_); }
    bool empty() const { return algebras_.empty(); }

private:
    std::vector<Algebra> algebras_;
};

// Line-oriented algebra format:
//
//   algebra N2
//   dim 4
//   params alpha
//   e1*e1 = e3
//   e2*e1 = -alpha*e3
//
// `#` starts a comment. Unlisted products are zero. Errors are ParseErrors with
// line and column.
Algebra parse_algebra_file(std::string_view text);

std::string serialize(const Algebra& a);

// Certificate format:
//
//   degeneration name
//   source D401
//   index lambda = t, alpha = 0, beta = 0
//   target N2 with alpha = 1
//   E1 = t*e1
//   ...
//
// Optional `params x, y` declares extra free names. `algebra ... end` blocks
// define algebras local to the file. Expressions may use sqrt, Theta and Psi;
// whether that is acceptable is decided at verification time.
Certificate parse_certificate_file(std::string_view text, const Catalog& catalog);

// D401(lambda, alpha, beta), N2(alpha), N3(alpha) and zero1..zero4.
std::vector<Algebra> builtin_catalog();

std::string read_file(const std::filesystem::path& path);

// Every *.alg file of a directory, in file-name order.
Catalog load_catalog_directory(const std::filesystem::path& dir);

// Every *.cert file of a directory, in file-name order.
std::vector<Certificate> load_certificate_directory(const std::filesystem::path& dir, const Catalog& catalog);

}  // namespace cdgeo

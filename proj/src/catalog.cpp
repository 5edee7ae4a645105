#include "cdgeo/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <regex>
#include <sstream>

#include "cdgeo/error.hpp"

namespace cdgeo {

Catalog::Catalog(std::vector<Algebra> algebras) {
    for (auto& a : algebras) add(std::move(a));
}

void Catalog::add(Algebra a) {
    for (auto& existing : algebras_)
        if (existing.name() == a.name()) {
            existing = std::move(a);
            return;
        }
    algebras_.push_back(std::move(a));
}

const Algebra* Catalog::find(std::string_view name) const {
    for (const auto& a : algebras_)
        if (a.name() == name) return &a;
    return nullptr;
}

const Algebra& Catalog::at(std::string_view name) const {
    if (const Algebra* a = find(name)) return *a;
    throw Error("unknown algebra '" + std::string(name) + "'");
}

namespace {

struct Line {
    std::string text;  // comment stripped, trailing space removed
    int number = 0;
    int indent = 0;    // column of the first non-blank character, 1-based

    // Text after the keyword, and its 1-based column.
    std::pair<std::string, int> rest_after(std::size_t keyword_length) const {
        std::size_t i = static_cast<std::size_t>(indent - 1) + keyword_length;
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        return {text.substr(i), static_cast<int>(i) + 1};
    }
    std::string keyword() const {
        std::size_t start = static_cast<std::size_t>(indent - 1), end = start;
        while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
        return text.substr(start, end - start);
    }
};

std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> out;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string raw(text.substr(pos, end - pos));
        ++number;
        pos = end + 1;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        while (!raw.empty() && std::isspace(static_cast<unsigned char>(raw.back()))) raw.pop_back();
        std::size_t first = 0;
        while (first < raw.size() && std::isspace(static_cast<unsigned char>(raw[first]))) ++first;
        if (first == raw.size()) continue;
        out.push_back({raw, number, static_cast<int>(first) + 1});
        if (end == text.size()) break;
    }
    return out;
}

bool is_identifier(std::string_view s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

// Items of a comma- or blank-separated name list, with columns.
std::vector<std::pair<std::string, int>> name_list(const std::string& text, int column) {
    std::vector<std::pair<std::string, int>> out;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',') {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) && text[j] != ',') ++j;
        out.emplace_back(text.substr(i, j - i), column + static_cast<int>(i));
        i = j;
    }
    return out;
}

// `name = expr` items separated by commas at parenthesis depth 0.
struct AssignmentItem {
    std::string name;
    int name_column;
    std::string expr;
    int expr_column;
};

std::vector<AssignmentItem> assignment_list(const std::string& text, int column, int line) {
    std::vector<AssignmentItem> out;
    std::size_t start = 0;
    int depth = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i < text.size()) {
            if (text[i] == '(') ++depth;
            if (text[i] == ')') --depth;
            if (text[i] != ',' || depth != 0) continue;
        }
        std::string item = text.substr(start, i - start);
        int item_column = column + static_cast<int>(start);
        std::size_t eq = item.find('=');
        if (eq == std::string::npos) throw ParseError("expected 'name = expression'", line, item_column);
        std::size_t a = 0;
        while (a < eq && std::isspace(static_cast<unsigned char>(item[a]))) ++a;
        std::size_t b = eq;
        while (b > a && std::isspace(static_cast<unsigned char>(item[b - 1]))) --b;
        std::string name = item.substr(a, b - a);
        if (!is_identifier(name)) throw ParseError("expected a parameter name", line, item_column + static_cast<int>(a));
        out.push_back({name, item_column + static_cast<int>(a), item.substr(eq + 1), item_column + static_cast<int>(eq) + 1});
        start = i + 1;
    }
    return out;
}

const std::regex kProductLine(R"(^e([0-9]+)\s*\*\s*e([0-9]+)\s*=(.*)$)");
const std::regex kBasisLine(R"(^E([0-9]+)\s*=(.*)$)");

// Parses the algebra block lines[begin, end).
Algebra parse_algebra_lines(const std::vector<Line>& lines, std::size_t begin, std::size_t end) {
    std::optional<std::string> name;
    std::optional<std::size_t> dim;
    std::vector<std::string> params;
    struct Product {
        std::size_t i, j;
        std::string rhs;
        int line, column;
    };
    std::vector<Product> products;
    std::map<std::pair<std::size_t, std::size_t>, int> seen;

    for (std::size_t l = begin; l < end; ++l) {
        const Line& line = lines[l];
        std::string kw = line.keyword();
        std::smatch m;
        std::string body = line.text.substr(static_cast<std::size_t>(line.indent - 1));
        if (kw == "algebra") {
            auto [rest, column] = line.rest_after(kw.size());
            if (name) throw ParseError("duplicate 'algebra' line", line.number, line.indent);
            if (!is_identifier(rest)) throw ParseError("expected an algebra name", line.number, column);
            name = rest;
        } else if (kw == "dim") {
            auto [rest, column] = line.rest_after(kw.size());
            if (dim) throw ParseError("duplicate 'dim' line", line.number, line.indent);
            if (rest.empty() || !std::all_of(rest.begin(), rest.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
                throw ParseError("expected a positive integer dimension", line.number, column);
            std::size_t value = std::stoul(rest);
            if (value == 0 || value > 64) throw ParseError("dimension out of range", line.number, column);
            dim = value;
        } else if (kw == "params") {
            auto [rest, column] = line.rest_after(kw.size());
            if (!products.empty()) throw ParseError("parameters must be declared before products", line.number, line.indent);
            for (auto& [p, c] : name_list(rest, column)) {
                if (p == kDeformationVariable) throw ParseError("t is reserved", line.number, c);
                if (!is_identifier(p) || is_reserved_name(p)) throw ParseError("invalid parameter name '" + p + "'", line.number, c);
                if (std::find(params.begin(), params.end(), p) != params.end())
                    throw ParseError("duplicate parameter '" + p + "'", line.number, c);
                params.push_back(p);
            }
        } else if (std::regex_match(body, m, kProductLine)) {
            if (!dim) throw ParseError("'dim' must precede products", line.number, line.indent);
            std::size_t i = std::stoul(m[1].str()), j = std::stoul(m[2].str());
            int i_column = line.indent + 1;
            int j_column = line.indent + static_cast<int>(m.position(2));
            if (i < 1 || i > *dim) throw ParseError("index out of range: e" + m[1].str(), line.number, i_column);
            if (j < 1 || j > *dim) throw ParseError("index out of range: e" + m[2].str(), line.number, j_column);
            if (!seen.emplace(std::make_pair(i, j), line.number).second)
                throw ParseError("duplicate product e" + std::to_string(i) + "*e" + std::to_string(j), line.number, line.indent);
            products.push_back({i - 1, j - 1, m[3].str(), line.number, line.indent + static_cast<int>(m.position(3))});
        } else {
            throw ParseError("unexpected '" + kw + "'", line.number, line.indent);
        }
    }
    int last_line = end > begin ? lines[end - 1].number : 0;
    if (!name) throw ParseError("missing 'algebra' line", last_line, 0);
    if (!dim) throw ParseError("missing 'dim' line", last_line, 0);

    Algebra a(*name, *dim, params);
    std::set<std::string> allowed(params.begin(), params.end());
    for (const auto& p : products) {
        ParseOptions options;
        options.basis_dim = static_cast<int>(*dim);
        options.line = p.line;
        options.column_offset = p.column - 1;
        Expression e = parse_expression(p.rhs, allowed, options);
        LinearForm form;
        try {
            form = e.evaluate_linear();
        } catch (const ArithmeticError& err) {
            throw ParseError(err.what(), p.line, p.column);
        }
        for (std::size_t k = 0; k < *dim; ++k) a.set_constant(p.i, p.j, k, form[k]);
    }
    return a;
}

std::string coefficient_text(const Scalar& c) {
    if (c.is_rational()) return to_string(c.to_rational());
    return "(" + c.to_string() + ")";
}

}  // namespace

Algebra parse_algebra_file(std::string_view text) {
    auto lines = split_lines(text);
    return parse_algebra_lines(lines, 0, lines.size());
}

std::string serialize(const Algebra& a) {
    std::ostringstream os;
    os << "algebra " << a.name() << "\n";
    os << "dim " << a.dim() << "\n";
    if (!a.params().empty()) {
        os << "params ";
        for (std::size_t i = 0; i < a.params().size(); ++i) os << (i ? ", " : "") << a.params()[i];
        os << "\n";
    }
    std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::string rhs;
            for (std::size_t k = 0; k < n; ++k) {
                Scalar c = a.constant(i, j, k);
                if (c.is_zero()) continue;
                std::string basis = "e" + std::to_string(k + 1);
                bool negative = c.is_rational() && sgn(c.to_rational()) < 0;
                if (negative) c = -c;
                std::string term = c.is_one() ? basis : coefficient_text(c) + "*" + basis;
                if (rhs.empty())
                    rhs = negative ? "-" + term : term;
                else
                    rhs += (negative ? " - " : " + ") + term;
            }
            if (!rhs.empty()) os << "e" << i + 1 << "*e" << j + 1 << " = " << rhs << "\n";
        }
    return os.str();
}

Certificate parse_certificate_file(std::string_view text, const Catalog& catalog) {
    auto lines = split_lines(text);
    Catalog local = catalog;
    std::vector<Line> body;
    for (std::size_t l = 0; l < lines.size(); ++l) {
        if (lines[l].keyword() != "algebra") {
            body.push_back(lines[l]);
            continue;
        }
        std::size_t end = l + 1;
        while (end < lines.size() && lines[end].keyword() != "end") ++end;
        if (end == lines.size()) throw ParseError("'algebra' block without 'end'", lines[l].number, lines[l].indent);
        local.add(parse_algebra_lines(lines, l, end));
        l = end;
    }

    Certificate c;
    std::optional<Line> source_line, target_line, index_line;
    std::string target_with;
    int target_with_column = 0;
    std::map<std::size_t, std::pair<std::string, Line>> rows;
    bool named = false;

    auto lookup = [&](const std::string& name, const Line& line, int column) -> const Algebra& {
        if (const Algebra* a = local.find(name)) return *a;
        throw ParseError("unknown algebra '" + name + "'", line.number, column);
    };

    std::map<std::size_t, int> row_expr_columns;
    for (const auto& line : body) {
        std::string kw = line.keyword();
        std::string text_from_indent = line.text.substr(static_cast<std::size_t>(line.indent - 1));
        std::smatch m;
        if (kw == "degeneration") {
            auto [rest, column] = line.rest_after(kw.size());
            if (named) throw ParseError("duplicate 'degeneration' line", line.number, line.indent);
            if (rest.empty()) throw ParseError("expected a certificate name", line.number, column);
            c.name = rest;
            named = true;
        } else if (kw == "source") {
            auto [rest, column] = line.rest_after(kw.size());
            if (source_line) throw ParseError("duplicate 'source' line", line.number, line.indent);
            c.source = lookup(rest, line, column);
            source_line = line;
        } else if (kw == "target") {
            auto [rest, column] = line.rest_after(kw.size());
            if (target_line) throw ParseError("duplicate 'target' line", line.number, line.indent);
            std::string name = rest;
            std::size_t space = rest.find_first_of(" \t");
            if (space != std::string::npos) {
                name = rest.substr(0, space);
                std::size_t w = rest.find_first_not_of(" \t", space);
                if (rest.compare(w, 4, "with") != 0 || (w + 4 < rest.size() && !std::isspace(static_cast<unsigned char>(rest[w + 4]))))
                    throw ParseError("expected 'with'", line.number, column + static_cast<int>(w));
                std::size_t v = rest.find_first_not_of(" \t", w + 4);
                if (v == std::string::npos) throw ParseError("expected assignments after 'with'", line.number, column + static_cast<int>(w));
                target_with = rest.substr(v);
                target_with_column = column + static_cast<int>(v);
            }
            c.target = lookup(name, line, column);
            target_line = line;
        } else if (kw == "index") {
            if (index_line) throw ParseError("duplicate 'index' line", line.number, line.indent);
            index_line = line;
        } else if (kw == "params") {
            auto [rest, column] = line.rest_after(kw.size());
            for (auto& [p, col] : name_list(rest, column)) {
                if (p == kDeformationVariable) throw ParseError("t is reserved", line.number, col);
                if (!is_identifier(p) || is_reserved_name(p)) throw ParseError("invalid parameter name '" + p + "'", line.number, col);
                c.extra_params.push_back(p);
            }
        } else if (std::regex_match(text_from_indent, m, kBasisLine)) {
            std::size_t i = std::stoul(m[1].str());
            if (rows.count(i)) throw ParseError("duplicate basis row E" + m[1].str(), line.number, line.indent);
            rows.emplace(i, std::make_pair(m[2].str(), line));
            row_expr_columns[i] = line.indent + static_cast<int>(m.position(2));
        } else {
            throw ParseError("unexpected '" + kw + "'", line.number, line.indent);
        }
    }
    int last = lines.empty() ? 0 : lines.back().number;
    if (!source_line) throw ParseError("missing 'source' line", last, 0);
    if (!target_line) throw ParseError("missing 'target' line", last, 0);
    if (!named) c.name = "unnamed";
    std::size_t n = c.source.dim();
    if (c.target.dim() != n)
        throw ParseError("source and target dimensions differ", target_line->number, target_line->indent);

    std::set<std::string> allowed = c.allowed_variables();
    ParseOptions scalar_options;
    scalar_options.mode = ParseMode::Sampled;

    if (index_line) {
        auto [rest, column] = index_line->rest_after(5);
        for (const auto& item : assignment_list(rest, column, index_line->number)) {
            const auto& params = c.source.params();
            if (std::find(params.begin(), params.end(), item.name) == params.end())
                throw ParseError("'" + item.name + "' is not a parameter of " + c.source.name(), index_line->number, item.name_column);
            for (const auto& [existing, e] : c.index)
                if (existing == item.name)
                    throw ParseError("parameter '" + item.name + "' assigned twice", index_line->number, item.name_column);
            ParseOptions o = scalar_options;
            o.line = index_line->number;
            o.column_offset = item.expr_column - 1;
            c.index.emplace_back(item.name, parse_expression(item.expr, allowed, o));
        }
    }

    if (!target_with.empty()) {
        std::set<std::string> target_allowed = allowed;
        target_allowed.erase(std::string(kDeformationVariable));
        for (const auto& item : assignment_list(target_with, target_with_column, target_line->number)) {
            const auto& params = c.target.params();
            if (std::find(params.begin(), params.end(), item.name) == params.end())
                throw ParseError("'" + item.name + "' is not a parameter of " + c.target.name(), target_line->number, item.name_column);
            ParseOptions o = scalar_options;
            o.line = target_line->number;
            o.column_offset = item.expr_column - 1;
            c.target_assignment.emplace_back(item.name, parse_expression(item.expr, target_allowed, o));
        }
    }

    for (const auto& [i, entry] : rows)
        if (i < 1 || i > n) throw ParseError("index out of range: E" + std::to_string(i), entry.second.number, entry.second.indent);
    for (std::size_t i = 1; i <= n; ++i)
        if (!rows.count(i)) throw ParseError("basis row missing: E" + std::to_string(i), last, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        const auto& [expr, line] = rows.at(i);
        ParseOptions o = scalar_options;
        o.basis_dim = static_cast<int>(n);
        o.line = line.number;
        o.column_offset = row_expr_columns.at(i) - 1;
        c.basis.push_back(parse_expression(expr, allowed, o));
    }

    auto assigned = [](const NamedExpressions& list, const std::string& p) {
        return std::any_of(list.begin(), list.end(), [&](const auto& entry) { return entry.first == p; });
    };
    for (const auto& p : c.source.params()) {
        if (assigned(c.index, p)) continue;
        const auto& tp = c.target.params();
        bool shared = std::find(tp.begin(), tp.end(), p) != tp.end() && !assigned(c.target_assignment, p);
        if (!shared)
            throw ParseError("unassigned source parameter '" + p + "' is not a target parameter", source_line->number,
                             source_line->indent);
    }
    return c;
}

std::vector<Algebra> builtin_catalog() {
    static const char* const texts[] = {
        "algebra D401\n"
        "dim 4\n"
        "params lambda, alpha, beta\n"
        "e1*e1 = lambda*e3 + e4\n"
        "e1*e3 = alpha*e4\n"
        "e2*e1 = e3\n"
        "e2*e2 = e3\n"
        "e2*e3 = beta*e4\n"
        "e3*e1 = e4\n",

        "algebra N2\n"
        "dim 4\n"
        "params alpha\n"
        "e1*e1 = e3\n"
        "e1*e2 = e4\n"
        "e2*e1 = -alpha*e3\n"
        "e2*e2 = -e4\n",

        "algebra N3\n"
        "dim 4\n"
        "params alpha\n"
        "e1*e1 = e4\n"
        "e1*e2 = alpha*e4\n"
        "e2*e1 = -alpha*e4\n"
        "e2*e2 = e4\n"
        "e3*e3 = e4\n",
    };
    std::vector<Algebra> out;
    for (const char* text : texts) out.push_back(parse_algebra_file(text));
    for (std::size_t n = 1; n <= 4; ++n) out.push_back(zero_algebra(n));
    return out;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read " + path.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

namespace {

std::vector<std::filesystem::path> files_with_extension(const std::filesystem::path& dir, const std::string& ext) {
    if (!std::filesystem::is_directory(dir)) throw Error("not a directory: " + dir.string());
    std::vector<std::filesystem::path> out;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ext) out.push_back(entry.path());
    std::sort(out.begin(), out.end());
    return out;
}

// Prefixes parse errors with the file name.
template <typename F>
auto with_file(const std::filesystem::path& path, F&& f) {
    try {
        return f();
    } catch (const ParseError& e) {
        throw ParseError(path.filename().string(), e);
    }
}

}  // namespace

Catalog load_catalog_directory(const std::filesystem::path& dir) {
    Catalog catalog;
    for (const auto& path : files_with_extension(dir, ".alg")) {
        Algebra a = with_file(path, [&] { return parse_algebra_file(read_file(path)); });
        if (catalog.find(a.name())) throw Error("duplicate algebra name '" + a.name() + "' in " + dir.string());
        catalog.add(std::move(a));
    }
    return catalog;
}

std::vector<Certificate> load_certificate_directory(const std::filesystem::path& dir, const Catalog& catalog) {
    std::vector<Certificate> out;
    for (const auto& path : files_with_extension(dir, ".cert"))
        out.push_back(with_file(path, [&] { return parse_certificate_file(read_file(path), catalog); }));
    return out;
}

}  // namespace cdgeo

// Line-oriented file formats and report emission. Formats are key/value with
// sparse coordinate lists, '#' comments, and an explicit kind/schema header;
// see docs/format.md. Coefficients stay strings until the field is known.
#pragma once

#include <istream>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "slackhopf/modcat.hpp"
#include "slackhopf/fincat.hpp"

namespace slackhopf::io {

enum class FieldTag { QQ, GFp };

struct SparseEntry {
    std::vector<long> idx;
    std::string coeff;
    int line = 0;
};

struct AlgebraFileData {
    FieldTag field = FieldTag::QQ;
    std::uint32_t p = 0;
    long dim = 0;
    std::vector<std::string> basis;
    std::vector<SparseEntry> unit, mult, delta, counit, phi, phi_inv;
    bool has_counit = false;
    bool has_phi = false;
};

struct TensorFileData {
    FieldTag field = FieldTag::QQ;
    std::uint32_t p = 0;
    long dim = 0;
    int rank = 2;
    std::vector<SparseEntry> entries;
};

struct QaFileData {
    FieldTag field = FieldTag::QQ;
    std::uint32_t p = 0;
    long dim = 0;
    std::vector<SparseEntry> s_entries, a_entries, b_entries;
};

namespace detail {

inline std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream ss(line);
    std::string t;
    while (ss >> t) {
        if (t[0] == '#') break;
        toks.push_back(t);
    }
    return toks;
}

inline long parse_long(const std::string& s, int line) {
    try {
        std::size_t pos = 0;
        long v = std::stol(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError("expected an integer, got '" + s + "'", line);
    }
}

inline SparseEntry parse_entry(const std::vector<std::string>& toks, std::size_t n_indices, int line) {
    if (toks.size() != n_indices + 2)
        throw ParseError("expected " + std::to_string(n_indices) + " indices and a coefficient", line);
    SparseEntry e;
    e.line = line;
    for (std::size_t i = 1; i <= n_indices; ++i) e.idx.push_back(parse_long(toks[i], line));
    e.coeff = toks.back();
    return e;
}

struct LineReader {
    std::istream& in;
    int line_no = 0;

    std::optional<std::pair<std::vector<std::string>, int>> next() {
        std::string line;
        while (std::getline(in, line)) {
            ++line_no;
            auto toks = tokenize(line);
            if (!toks.empty()) return std::make_pair(std::move(toks), line_no);
        }
        return std::nullopt;
    }
};

inline void expect_header(LineReader& r, const std::string& kind) {
    auto first = r.next();
    if (!first || first->first.size() != 2 || first->first[0] != kind || first->first[1] != "1")
        throw ParseError("expected header '" + kind + " 1'", first ? first->second : 1);
}

inline void parse_field_line(const std::vector<std::string>& toks, int line, FieldTag& tag, std::uint32_t& p) {
    if (toks.size() == 2 && toks[1] == "QQ") {
        tag = FieldTag::QQ;
        p = 0;
        return;
    }
    if (toks.size() == 3 && toks[1] == "GF") {
        long pv = parse_long(toks[2], line);
        if (pv < 2) throw ParseError("GF modulus must be at least 2", line);
        // a composite modulus is not a field; reject small composites outright
        for (long d = 2; d * d <= pv; ++d)
            if (pv % d == 0) throw ParseError("GF modulus " + std::to_string(pv) + " is not prime", line);
        tag = FieldTag::GFp;
        p = static_cast<std::uint32_t>(pv);
        return;
    }
    throw ParseError("field must be 'QQ' or 'GF p'", line);
}

inline void check_index_range(const SparseEntry& e, long dim) {
    for (long i : e.idx)
        if (i < 0 || i >= dim) throw ParseError("index " + std::to_string(i) + " out of range [0, " +
                                                std::to_string(dim) + ")", e.line);
}

} // namespace detail

inline AlgebraFileData parse_algebra_stream(std::istream& in) {
    detail::LineReader r{in};
    detail::expect_header(r, "alg");
    AlgebraFileData f;
    bool saw_field = false, saw_dim = false;
    while (auto lt = r.next()) {
        const auto& [toks, line] = *lt;
        const std::string& key = toks[0];
        if (key == "field") {
            detail::parse_field_line(toks, line, f.field, f.p);
            saw_field = true;
        } else if (key == "dim") {
            if (toks.size() != 2) throw ParseError("dim takes one value", line);
            f.dim = detail::parse_long(toks[1], line);
            if (f.dim < 1 || f.dim > 16) throw ParseError("dim must be between 1 and 16", line);
            saw_dim = true;
        } else if (key == "basis") {
            f.basis.assign(toks.begin() + 1, toks.end());
        } else if (key == "unit") {
            f.unit.push_back(detail::parse_entry(toks, 1, line));
        } else if (key == "mult") {
            f.mult.push_back(detail::parse_entry(toks, 3, line));
        } else if (key == "delta") {
            f.delta.push_back(detail::parse_entry(toks, 3, line));
        } else if (key == "counit") {
            f.counit.push_back(detail::parse_entry(toks, 1, line));
            f.has_counit = true;
        } else if (key == "phi") {
            f.phi.push_back(detail::parse_entry(toks, 3, line));
            f.has_phi = true;
        } else if (key == "phiinv") {
            f.phi_inv.push_back(detail::parse_entry(toks, 3, line));
        } else {
            throw ParseError("unknown directive '" + key + "'", line);
        }
    }
    if (!saw_field) throw ParseError("missing 'field' line", r.line_no);
    if (!saw_dim) throw ParseError("missing 'dim' line", r.line_no);
    if (f.basis.empty())
        for (long i = 0; i < f.dim; ++i) f.basis.push_back("e" + std::to_string(i));
    if (static_cast<long>(f.basis.size()) != f.dim) throw ParseError("basis name count != dim", r.line_no);
    if (f.has_phi && f.phi_inv.empty()) throw ParseError("phi requires phiinv", r.line_no);
    for (const auto* block : {&f.unit, &f.mult, &f.delta, &f.counit, &f.phi, &f.phi_inv})
        for (const auto& e : *block) detail::check_index_range(e, f.dim);
    return f;
}

inline TensorFileData parse_tensor_stream(std::istream& in) {
    detail::LineReader r{in};
    detail::expect_header(r, "tensor");
    TensorFileData f;
    bool saw_field = false, saw_dim = false;
    while (auto lt = r.next()) {
        const auto& [toks, line] = *lt;
        const std::string& key = toks[0];
        if (key == "field") {
            detail::parse_field_line(toks, line, f.field, f.p);
            saw_field = true;
        } else if (key == "dim") {
            f.dim = detail::parse_long(toks[1], line);
            if (f.dim < 1 || f.dim > 16) throw ParseError("dim must be between 1 and 16", line);
            saw_dim = true;
        } else if (key == "rank") {
            f.rank = static_cast<int>(detail::parse_long(toks[1], line));
            if (f.rank < 1 || f.rank > 4) throw ParseError("rank must be between 1 and 4", line);
        } else if (key == "entry") {
            f.entries.push_back(detail::parse_entry(toks, static_cast<std::size_t>(f.rank), line));
        } else {
            throw ParseError("unknown directive '" + key + "'", line);
        }
    }
    if (!saw_field || !saw_dim) throw ParseError("tensor file needs 'field' and 'dim'", r.line_no);
    for (const auto& e : f.entries) detail::check_index_range(e, f.dim);
    return f;
}

inline QaFileData parse_qa_stream(std::istream& in) {
    detail::LineReader r{in};
    detail::expect_header(r, "qa");
    QaFileData f;
    bool saw_field = false, saw_dim = false;
    while (auto lt = r.next()) {
        const auto& [toks, line] = *lt;
        const std::string& key = toks[0];
        if (key == "field") {
            detail::parse_field_line(toks, line, f.field, f.p);
            saw_field = true;
        } else if (key == "dim") {
            f.dim = detail::parse_long(toks[1], line);
            saw_dim = true;
        } else if (key == "S") {
            f.s_entries.push_back(detail::parse_entry(toks, 2, line));
        } else if (key == "a") {
            f.a_entries.push_back(detail::parse_entry(toks, 1, line));
        } else if (key == "b") {
            f.b_entries.push_back(detail::parse_entry(toks, 1, line));
        } else {
            throw ParseError("unknown directive '" + key + "'", line);
        }
    }
    if (!saw_field || !saw_dim) throw ParseError("qa file needs 'field' and 'dim'", r.line_no);
    for (const auto* block : {&f.s_entries, &f.a_entries, &f.b_entries})
        for (const auto& e : *block) detail::check_index_range(e, f.dim);
    return f;
}

inline FinCategory parse_category_stream(std::istream& in) {
    detail::LineReader r{in};
    detail::expect_header(r, "category");
    FinCategory c;
    std::map<std::string, int> mor_index;
    struct PendingCompose {
        std::string f, g, h;
        int line;
    };
    std::vector<PendingCompose> composes;
    std::vector<std::pair<std::pair<int, std::string>, int>> identities; // ((object, name), line)
    while (auto lt = r.next()) {
        const auto& [toks, line] = *lt;
        const std::string& key = toks[0];
        if (key == "objects") {
            c.n_objects = static_cast<int>(detail::parse_long(toks[1], line));
        } else if (key == "mor") {
            if (toks.size() != 4) throw ParseError("mor takes: name dom cod", line);
            FinCategory::Morphism m;
            m.name = toks[1];
            m.dom = static_cast<int>(detail::parse_long(toks[2], line));
            m.cod = static_cast<int>(detail::parse_long(toks[3], line));
            if (m.dom < 0 || m.dom >= c.n_objects || m.cod < 0 || m.cod >= c.n_objects)
                throw ParseError("morphism endpoints out of range", line);
            if (mor_index.count(m.name)) throw ParseError("duplicate morphism name '" + m.name + "'", line);
            mor_index[m.name] = c.mor_count();
            c.morphisms.push_back(std::move(m));
        } else if (key == "identity") {
            if (toks.size() != 3) throw ParseError("identity takes: object name", line);
            identities.push_back({{static_cast<int>(detail::parse_long(toks[1], line)), toks[2]}, line});
        } else if (key == "compose") {
            if (toks.size() != 4) throw ParseError("compose takes: f g h (meaning f o g = h)", line);
            composes.push_back({toks[1], toks[2], toks[3], line});
        } else {
            throw ParseError("unknown directive '" + key + "'", line);
        }
    }
    auto lookup = [&](const std::string& name, int line) {
        auto it = mor_index.find(name);
        if (it == mor_index.end()) throw ParseError("unknown morphism '" + name + "'", line);
        return it->second;
    };
    c.identities.assign(static_cast<std::size_t>(c.n_objects), -1);
    for (const auto& [obj_name, line] : identities) {
        if (obj_name.first < 0 || obj_name.first >= c.n_objects) throw ParseError("object out of range", line);
        c.identities[static_cast<std::size_t>(obj_name.first)] = lookup(obj_name.second, line);
    }
    for (int s = 0; s < c.n_objects; ++s)
        if (c.identities[static_cast<std::size_t>(s)] < 0)
            throw ParseError("missing identity for object " + std::to_string(s), r.line_no);
    c.compose.assign(static_cast<std::size_t>(c.mor_count()),
                     std::vector<int>(static_cast<std::size_t>(c.mor_count()), -1));
    for (const auto& pc : composes) {
        int f = lookup(pc.f, pc.line), g = lookup(pc.g, pc.line), h = lookup(pc.h, pc.line);
        if (!c.composable(f, g)) throw ParseError("pair '" + pc.f + " o " + pc.g + "' is not composable", pc.line);
        c.compose[static_cast<std::size_t>(f)][static_cast<std::size_t>(g)] = h;
    }
    return c;
}

inline FinMonoid parse_monoid_stream(std::istream& in) {
    detail::LineReader r{in};
    detail::expect_header(r, "monoid");
    FinMonoid m;
    long n = 0;
    std::map<std::string, int> index;
    struct PendingOp {
        std::string x, y, z;
        int line;
    };
    std::vector<PendingOp> ops;
    std::string unit_name;
    int unit_line = 0;
    while (auto lt = r.next()) {
        const auto& [toks, line] = *lt;
        const std::string& key = toks[0];
        if (key == "elements") {
            n = detail::parse_long(toks[1], line);
        } else if (key == "names") {
            m.names.assign(toks.begin() + 1, toks.end());
            for (int i = 0; i < static_cast<int>(m.names.size()); ++i) index[m.names[static_cast<std::size_t>(i)]] = i;
        } else if (key == "unit") {
            unit_name = toks[1];
            unit_line = line;
        } else if (key == "op") {
            if (toks.size() != 4) throw ParseError("op takes: x y z (meaning x*y = z)", line);
            ops.push_back({toks[1], toks[2], toks[3], line});
        } else {
            throw ParseError("unknown directive '" + key + "'", line);
        }
    }
    if (m.names.empty())
        for (long i = 0; i < n; ++i) {
            m.names.push_back("m" + std::to_string(i));
            index[m.names.back()] = static_cast<int>(i);
        }
    if (static_cast<long>(m.names.size()) != n) throw ParseError("names count != elements", r.line_no);
    auto lookup = [&](const std::string& name, int line) {
        auto it = index.find(name);
        if (it == index.end()) throw ParseError("unknown element '" + name + "'", line);
        return it->second;
    };
    m.unit = lookup(unit_name, unit_line);
    m.op.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
    for (const auto& op : ops)
        m.op[static_cast<std::size_t>(lookup(op.x, op.line))][static_cast<std::size_t>(lookup(op.y, op.line))] =
            lookup(op.z, op.line);
    for (long x = 0; x < n; ++x)
        for (long y = 0; y < n; ++y)
            if (m.op[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] < 0)
                throw ParseError("operation table incomplete at (" + m.names[static_cast<std::size_t>(x)] + ", " +
                                     m.names[static_cast<std::size_t>(y)] + ")", r.line_no);
    return m;
}

// ---------------------------------------------------------------------------
// Typed instantiation
// ---------------------------------------------------------------------------

template <class K>
struct TypedAlgebraFile {
    ComagmaAlgebra<K> comagma;
    std::optional<CounitData<K>> counit;
    std::optional<TensorElement<K>> phi, phi_inv;

    QuasiBialgebra<K> as_quasi() const {
        if (!counit || !counit->bialgebra_counit)
            throw Error("file does not define a quasi-bialgebra: missing or non-bialgebra counit");
        if (!phi) throw Error("file does not define a quasi-bialgebra: missing associator");
        return QuasiBialgebra<K>{comagma, *counit, *phi, *phi_inv};
    }
};

template <class K>
TypedAlgebraFile<K> instantiate(const AlgebraFileData& f, const Field<K>& field) {
    const Eigen::Index n = f.dim;
    Mat<K> mult = Mat<K>::Constant(n, n * n, field.zero());
    for (const auto& e : f.mult) mult(e.idx[2], e.idx[0] * n + e.idx[1]) += field.parse(e.coeff);
    Vec<K> unit = Vec<K>::Constant(n, field.zero());
    for (const auto& e : f.unit) unit(e.idx[0]) += field.parse(e.coeff);
    Mat<K> delta = Mat<K>::Constant(n * n, n, field.zero());
    for (const auto& e : f.delta) delta(e.idx[1] * n + e.idx[2], e.idx[0]) += field.parse(e.coeff);

    TypedAlgebraFile<K> out;
    out.comagma = ComagmaAlgebra<K>(FinDimAlgebra<K>(field, f.basis, std::move(mult), std::move(unit)),
                                    std::move(delta));
    if (f.has_counit) {
        Mat<K> eps = Mat<K>::Constant(1, n, field.zero());
        for (const auto& e : f.counit) eps(0, e.idx[0]) += field.parse(e.coeff);
        out.counit = make_counit(out.comagma, std::move(eps));
    }
    if (f.has_phi) {
        TensorElement<K> phi = TensorElement<K>::zero(field, 3, n);
        for (const auto& e : f.phi) phi.at({e.idx[0], e.idx[1], e.idx[2]}) += field.parse(e.coeff);
        TensorElement<K> phi_inv = TensorElement<K>::zero(field, 3, n);
        for (const auto& e : f.phi_inv) phi_inv.at({e.idx[0], e.idx[1], e.idx[2]}) += field.parse(e.coeff);
        out.phi = std::move(phi);
        out.phi_inv = std::move(phi_inv);
    }
    return out;
}

template <class K>
TensorElement<K> instantiate_tensor(const TensorFileData& f, const Field<K>& field) {
    TensorElement<K> t = TensorElement<K>::zero(field, f.rank, f.dim);
    for (const auto& e : f.entries) {
        Eigen::Index flat = 0;
        for (long i : e.idx) flat = flat * f.dim + i;
        t.coeffs(flat) += field.parse(e.coeff);
    }
    return t;
}

template <class K>
QuasiAntipode<K> instantiate_qa(const QaFileData& f, const Field<K>& field) {
    const Eigen::Index n = f.dim;
    QuasiAntipode<K> qa;
    qa.S = Mat<K>::Constant(n, n, field.zero());
    for (const auto& e : f.s_entries) qa.S(e.idx[0], e.idx[1]) += field.parse(e.coeff);
    qa.a_elem = Vec<K>::Constant(n, field.zero());
    for (const auto& e : f.a_entries) qa.a_elem(e.idx[0]) += field.parse(e.coeff);
    qa.b_elem = Vec<K>::Constant(n, field.zero());
    for (const auto& e : f.b_entries) qa.b_elem(e.idx[0]) += field.parse(e.coeff);
    return qa;
}

// Calls fn with the matching Field<K>; both branches must return the same type.
template <class Fn>
auto with_field(FieldTag tag, std::uint32_t p, Fn&& fn) {
    if (tag == FieldTag::QQ) return fn(Field<Rational>{});
    return fn(Field<Fp>{p});
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

template <class K>
std::string field_line(const Field<K>& field) {
    if constexpr (Field<K>::finite)
        return "field GF " + std::to_string(field.p);
    else
        return "field QQ";
}

template <class K>
void write_sparse_vec(std::ostream& os, const std::string& key, const Vec<K>& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (!v(i).is_zero()) os << key << ' ' << i << ' ' << v(i).str() << '\n';
}

template <class K>
void write_sparse_mat(std::ostream& os, const std::string& key, const Mat<K>& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) os << key << ' ' << i << ' ' << j << ' ' << m(i, j).str() << '\n';
}

template <class K>
void write_sparse_tensor(std::ostream& os, const std::string& key, const TensorElement<K>& t) {
    for (Eigen::Index f = 0; f < t.coeffs.size(); ++f) {
        if (t.coeffs(f).is_zero()) continue;
        std::vector<Eigen::Index> idx(static_cast<std::size_t>(t.rank));
        Eigen::Index rem = f;
        for (int m = t.rank - 1; m >= 0; --m) {
            idx[static_cast<std::size_t>(m)] = rem % t.dim;
            rem /= t.dim;
        }
        os << key;
        for (Eigen::Index i : idx) os << ' ' << i;
        os << ' ' << t.coeffs(f).str() << '\n';
    }
}

template <class K>
void serialize_algebra(std::ostream& os, const TypedAlgebraFile<K>& t) {
    const auto& a = t.comagma.alg;
    const Eigen::Index n = a.dim();
    os << "alg 1\n" << field_line(a.field()) << '\n' << "dim " << n << '\n';
    os << "basis";
    for (const auto& b : a.basis_names()) os << ' ' << b;
    os << '\n';
    write_sparse_vec(os, "unit", a.unit());
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            for (Eigen::Index k = 0; k < n; ++k) {
                const K& c = a.mult_matrix()(k, i * n + j);
                if (!c.is_zero()) os << "mult " << i << ' ' << j << ' ' << k << ' ' << c.str() << '\n';
            }
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index jk = 0; jk < n * n; ++jk) {
            const K& c = t.comagma.delta(jk, i);
            if (!c.is_zero()) os << "delta " << i << ' ' << jk / n << ' ' << jk % n << ' ' << c.str() << '\n';
        }
    if (t.counit) write_sparse_vec(os, "counit", Vec<K>(t.counit->eps.transpose()));
    if (t.phi) {
        write_sparse_tensor(os, "phi", *t.phi);
        write_sparse_tensor(os, "phiinv", *t.phi_inv);
    }
}

template <class K>
void serialize_tensor(std::ostream& os, const Field<K>& field, const TensorElement<K>& t) {
    os << "tensor 1\n" << field_line(field) << '\n' << "dim " << t.dim << '\n' << "rank " << t.rank << '\n';
    write_sparse_tensor(os, "entry", t);
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

inline constexpr const char* report_schema = "report 1";

// Ordered key/payload lines; the machine-readable output of every command.
class Report {
public:
    explicit Report(const std::string& command) {
        lines_.push_back(report_schema);
        lines_.push_back("generator slackhopf");
        lines_.push_back("command " + command);
    }

    void kv(const std::string& key, const std::string& value) { lines_.push_back(key + " " + value); }

    void check(const std::string& name, bool pass) { lines_.push_back("check " + name + (pass ? " pass" : " fail")); }

    void violation(const std::string& text) { lines_.push_back("violation " + text); }

    void violations(const ValidationReport& rep) {
        for (const auto& v : rep.violations) violation(v);
    }

    template <class K>
    void tensor(const std::string& key, const TensorElement<K>& t) {
        std::ostringstream os;
        write_sparse_tensor(os, key, t);
        append_stream(os);
    }

    template <class K>
    void matrix(const std::string& key, const Mat<K>& m) {
        std::ostringstream os;
        write_sparse_mat(os, key, m);
        append_stream(os);
    }

    template <class K>
    void vec(const std::string& key, const Vec<K>& v) {
        std::ostringstream os;
        write_sparse_vec(os, key, v);
        append_stream(os);
    }

    void write(std::ostream& os) const {
        for (const auto& l : lines_) os << l << '\n';
    }

    const std::vector<std::string>& lines() const { return lines_; }

private:
    void append_stream(const std::ostringstream& os) {
        std::istringstream is(os.str());
        std::string line;
        while (std::getline(is, line)) lines_.push_back(line);
    }

    std::vector<std::string> lines_;
};

// Parses a report back into (key, tokens) rows; used by round-trip tests and
// by consumers that feed certificates back into the tool.
inline std::vector<std::pair<std::string, std::vector<std::string>>> parse_report(std::istream& in) {
    std::vector<std::pair<std::string, std::vector<std::string>>> rows;
    std::string line;
    bool first = true;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto toks = detail::tokenize(line);
        if (toks.empty()) continue;
        if (first) {
            if (toks.size() != 2 || toks[0] != "report" || toks[1] != "1")
                throw ParseError("expected header 'report 1'", line_no);
            first = false;
        }
        std::string key = toks.front();
        toks.erase(toks.begin());
        rows.emplace_back(std::move(key), std::move(toks));
    }
    return rows;
}

} // namespace slackhopf::io

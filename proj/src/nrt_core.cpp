#include "nrt/nrt_core.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace nrt {

namespace {

void check_params(uint32_t q, uint32_t n, uint32_t s) {
    if (!is_prime(q)) throw std::domain_error("NRT space: field size " + std::to_string(q) + " is not prime");
    if (q > 251) throw std::invalid_argument("NRT space: field sizes above 251 are not supported");
    if (n == 0 || s == 0) throw std::invalid_argument("NRT space: n and s must be positive");
}

}  // namespace

NrtWord::NrtWord(uint32_t q_, uint32_t n_, uint32_t s_) : q(q_), n(n_), s(s_), e(size_t(n_) * s_, 0) {
    check_params(q_, n_, s_);
}

NrtWord::NrtWord(uint32_t q_, uint32_t n_, uint32_t s_, std::vector<uint8_t> entries)
    : q(q_), n(n_), s(s_), e(std::move(entries)) {
    check_params(q_, n_, s_);
    if (e.size() != size_t(n) * s) throw std::invalid_argument("NrtWord: entry count mismatch");
    for (uint8_t x : e)
        if (x >= q) throw std::invalid_argument("NrtWord: entry out of field range");
}

bool NrtWord::is_zero() const {
    return std::all_of(e.begin(), e.end(), [](uint8_t x) { return x == 0; });
}

NrtWord NrtWord::operator+(const NrtWord& o) const {
    if (!same_space(o)) throw std::invalid_argument("NrtWord: parameter mismatch");
    NrtWord r(q, n, s);
    for (size_t i = 0; i < e.size(); ++i) r.e[i] = gf::add(e[i], o.e[i], q);
    return r;
}

NrtWord NrtWord::scaled(uint8_t c) const {
    NrtWord r(q, n, s);
    for (size_t i = 0; i < e.size(); ++i) r.e[i] = gf::mul(e[i], c, q);
    return r;
}

std::string NrtWord::str() const {
    std::string out;
    for (uint32_t i = 0; i < n; ++i) {
        out += i ? " | " : "";
        for (uint32_t j = 0; j < s; ++j) {
            if (j) out += " ";
            out += std::to_string(at(i, j));
        }
    }
    return out;
}

uint32_t nrt_row_weight(const NrtWord& w, uint32_t i) {
    for (uint32_t j = w.s; j > 0; --j)
        if (w.at(i, j - 1) != 0) return j;
    return 0;
}

uint32_t nrt_weight(const NrtWord& w) {
    uint32_t total = 0;
    for (uint32_t i = 0; i < w.n; ++i) total += nrt_row_weight(w, i);
    return total;
}

ShapeVector shape(const NrtWord& w) {
    ShapeVector sv;
    sv.n = w.n;
    sv.s = w.s;
    sv.e.assign(w.s, 0);
    for (uint32_t i = 0; i < w.n; ++i) {
        uint32_t rho = nrt_row_weight(w, i);
        if (rho > 0) sv.e[rho - 1] += 1;
    }
    sv.e0 = w.n - std::accumulate(sv.e.begin(), sv.e.end(), 0u);
    return sv;
}

std::vector<uint32_t> ShapeVector::exponents() const {
    std::vector<uint32_t> out(s + 1, 0);
    out[0] = e0;
    for (uint32_t j = 0; j < s; ++j) out[j + 1] = e[j];
    return out;
}

FieldElement nrt_inner(const NrtWord& v, const NrtWord& u) {
    if (!v.same_space(u)) throw std::invalid_argument("nrt_inner: parameter mismatch");
    uint32_t acc = 0;
    for (uint32_t i = 0; i < v.n; ++i)
        for (uint32_t j = 0; j < v.s; ++j)
            acc = (acc + uint32_t(v.at(i, j)) * u.at(i, v.s - 1 - j)) % v.q;
    return {acc, v.q};
}

NrtCode::NrtCode(uint32_t q, uint32_t n, uint32_t s, std::vector<gf::Row> rref_rows)
    : q_(q), n_(n), s_(s), k_(static_cast<uint32_t>(rref_rows.size())), gen_(std::move(rref_rows)) {
    check_params(q, n, s);
    for (const auto& r : gen_)
        if (r.size() != size_t(n) * s) throw std::invalid_argument("NrtCode: generator width mismatch");
}

NrtWord NrtCode::gen_word(uint32_t i) const { return {q_, n_, s_, gen_.at(i)}; }

bool operator<(const NrtCode& a, const NrtCode& b) {
    if (a.q_ != b.q_) return a.q_ < b.q_;
    if (a.n_ != b.n_) return a.n_ < b.n_;
    if (a.s_ != b.s_) return a.s_ < b.s_;
    return a.gen_ < b.gen_;
}

std::string NrtCode::str() const {
    std::ostringstream out;
    write_code(out, *this);
    return out.str();
}

NrtCode code_from_flat_rows(uint32_t q, uint32_t n, uint32_t s, const std::vector<gf::Row>& rows) {
    check_params(q, n, s);
    std::vector<gf::Row> m;
    for (const auto& r : rows) {
        if (r.size() != size_t(n) * s) throw std::invalid_argument("code_from_flat_rows: row width mismatch");
        for (uint8_t x : r)
            if (x >= q) throw std::invalid_argument("code_from_flat_rows: entry out of field range");
        m.push_back(r);
    }
    gf::rref(m, q);
    return {q, n, s, std::move(m)};
}

NrtCode code_from_rows(uint32_t q, uint32_t n, uint32_t s, const std::vector<NrtWord>& rows) {
    std::vector<gf::Row> m;
    for (const auto& w : rows) {
        if (w.q != q || w.n != n || w.s != s) throw std::invalid_argument("code_from_rows: word parameter mismatch");
        m.push_back(w.e);
    }
    return code_from_flat_rows(q, n, s, m);
}

NrtCode zero_code(uint32_t q, uint32_t n, uint32_t s) { return code_from_flat_rows(q, n, s, {}); }

void enumerate_codewords(const NrtCode& c, uint64_t cap, const std::function<void(const NrtWord&)>& fn) {
    uint32_t k = c.k();
    // q^k against the cap, without overflow.
    uint64_t count = 1;
    for (uint32_t i = 0; i < k; ++i) {
        if (count > cap / c.q()) throw cap_exceeded("enumerate_codewords: q^k exceeds cap " + std::to_string(cap));
        count *= c.q();
    }
    if (count > cap) throw cap_exceeded("enumerate_codewords: q^k exceeds cap " + std::to_string(cap));

    NrtWord w(c.q(), c.n(), c.s());
    std::vector<uint8_t> coeff(k, 0);
    while (true) {
        fn(w);
        // Odometer step; adding/removing one multiple of a generator per digit.
        uint32_t d = 0;
        while (d < k) {
            coeff[d] += 1;
            const gf::Row& g = c.gen()[d];
            if (coeff[d] < c.q()) {
                for (size_t i = 0; i < w.e.size(); ++i) w.e[i] = gf::add(w.e[i], g[i], c.q());
                break;
            }
            coeff[d] = 0;
            // remove (q-1) copies = add one copy (since q*g = 0)
            for (size_t i = 0; i < w.e.size(); ++i) w.e[i] = gf::add(w.e[i], g[i], c.q());
            ++d;
        }
        if (d == k) break;
    }
}

std::vector<NrtWord> codewords(const NrtCode& c, uint64_t cap) {
    std::vector<NrtWord> out;
    enumerate_codewords(c, cap, [&](const NrtWord& w) { out.push_back(w); });
    return out;
}

namespace {

// The Gram matrix of <,>_N is the permutation that reverses each s-block.
// dual(C) = nullspace of G * P, and G P y^T = 0 iff <g, y>_N = 0.
std::vector<gf::Row> pairing_image(const NrtCode& c) {
    std::vector<gf::Row> gp;
    gp.reserve(c.k());
    for (const auto& row : c.gen()) {
        gf::Row r(row.size());
        for (uint32_t i = 0; i < c.n(); ++i)
            for (uint32_t j = 0; j < c.s(); ++j) r[size_t(i) * c.s() + j] = row[size_t(i) * c.s() + (c.s() - 1 - j)];
        gp.push_back(std::move(r));
    }
    return gp;
}

}  // namespace

NrtCode dual_code(const NrtCode& c) {
    std::vector<gf::Row> basis = gf::nullspace(pairing_image(c), c.length(), c.q());
    return {c.q(), c.n(), c.s(), std::move(basis)};
}

bool is_self_orthogonal(const NrtCode& c) {
    // G G^od = 0, equivalently every pair of generators pairs to zero.
    for (uint32_t a = 0; a < c.k(); ++a) {
        NrtWord wa = c.gen_word(a);
        for (uint32_t b = a; b < c.k(); ++b) {
            if (!nrt_inner(wa, c.gen_word(b)).is_zero()) return false;
        }
    }
    return true;
}

bool is_self_dual(const NrtCode& c) { return 2 * c.k() == c.length() && is_self_orthogonal(c); }

ParityProfile parity_profile(const NrtCode& c, uint64_t cap) {
    ParityProfile p;
    p.all_even_weight = true;
    bool even_rows = true;
    enumerate_codewords(c, cap, [&](const NrtWord& w) {
        ShapeVector sv = shape(w);
        uint32_t rho = 0;
        for (uint32_t j = 0; j < sv.s; ++j) rho += (j + 1) * sv.e[j];
        if (rho % 2 != 0) p.all_even_weight = false;
        if (c.s() == 2 && ((sv.e[0] % 2) != 0 || (sv.e[1] % 2) != 0)) even_rows = false;
    });
    if (c.s() == 2) p.even_rows_weight1_and_2 = even_rows;
    return p;
}

uint64_t isometry_group_order(uint32_t n, uint32_t s, uint32_t q, uint64_t cap) {
    check_params(q, n, s);
    auto mul_checked = [&](uint64_t a, uint64_t b) -> uint64_t {
        if (b != 0 && a > cap / b) throw cap_exceeded("isometry_group_order: count exceeds cap " + std::to_string(cap));
        return a * b;
    };
    // |T_s| = (q-1)^s * q^{s(s-1)/2}
    uint64_t ts = 1;
    for (uint32_t i = 0; i < s; ++i) ts = mul_checked(ts, q - 1);
    for (uint32_t i = 0; i < s * (s - 1) / 2; ++i) ts = mul_checked(ts, q);
    uint64_t total = 1;
    for (uint32_t i = 0; i < n; ++i) total = mul_checked(total, ts);
    for (uint32_t i = 2; i <= n; ++i) total = mul_checked(total, i);
    return total;
}

namespace {

// All invertible upper-triangular s x s matrices over GF(q), row-major.
std::vector<std::vector<uint8_t>> all_triangular(uint32_t s, uint32_t q) {
    std::vector<size_t> free_pos;  // strictly-above-diagonal positions
    for (uint32_t i = 0; i < s; ++i)
        for (uint32_t j = i + 1; j < s; ++j) free_pos.push_back(size_t(i) * s + j);

    std::vector<std::vector<uint8_t>> out;
    std::vector<uint8_t> diag(s, 1), upper(free_pos.size(), 0);
    while (true) {
        std::vector<uint8_t> m(size_t(s) * s, 0);
        for (uint32_t i = 0; i < s; ++i) m[size_t(i) * s + i] = diag[i];
        for (size_t t = 0; t < free_pos.size(); ++t) m[free_pos[t]] = upper[t];
        out.push_back(std::move(m));

        // advance diag (values 1..q-1) then upper (values 0..q-1)
        uint32_t d = 0;
        for (; d < s; ++d) {
            if (++diag[d] < q) break;
            diag[d] = 1;
        }
        if (d < s) continue;
        size_t u = 0;
        for (; u < upper.size(); ++u) {
            if (++upper[u] < q) break;
            upper[u] = 0;
        }
        if (u == upper.size()) break;
    }
    return out;
}

}  // namespace

void for_each_isometry(uint32_t n, uint32_t s, uint32_t q, uint64_t cap,
                       const std::function<void(const NrtIsometry&)>& fn) {
    isometry_group_order(n, s, q, cap);  // cap check
    std::vector<std::vector<uint8_t>> tri = all_triangular(s, q);

    NrtIsometry iso;
    iso.perm.resize(n);
    std::iota(iso.perm.begin(), iso.perm.end(), 0u);
    iso.blocks.assign(n, tri[0]);

    std::vector<size_t> idx(n, 0);
    do {
        std::fill(idx.begin(), idx.end(), 0);
        for (uint32_t i = 0; i < n; ++i) iso.blocks[i] = tri[0];
        while (true) {
            fn(iso);
            uint32_t d = 0;
            for (; d < n; ++d) {
                if (++idx[d] < tri.size()) {
                    iso.blocks[d] = tri[idx[d]];
                    break;
                }
                idx[d] = 0;
                iso.blocks[d] = tri[0];
            }
            if (d == n) break;
        }
    } while (std::next_permutation(iso.perm.begin(), iso.perm.end()));
}

NrtWord apply_isometry(const NrtIsometry& iso, const NrtWord& w) {
    NrtWord r(w.q, w.n, w.s);
    for (uint32_t i = 0; i < w.n; ++i) {
        uint32_t src = iso.perm[i];
        const std::vector<uint8_t>& m = iso.blocks[i];
        // (v M^T)_j = sum_{l >= j} M[j][l] v_l — upper-triangular action
        for (uint32_t j = 0; j < w.s; ++j) {
            uint32_t acc = 0;
            for (uint32_t l = j; l < w.s; ++l) acc = (acc + uint32_t(m[size_t(j) * w.s + l]) * w.at(src, l)) % w.q;
            r.at(i, j) = static_cast<uint8_t>(acc);
        }
    }
    return r;
}

std::map<std::vector<uint32_t>, uint64_t> shape_distribution(const NrtCode& c, uint64_t cap) {
    std::map<std::vector<uint32_t>, uint64_t> dist;
    enumerate_codewords(c, cap, [&](const NrtWord& w) { dist[shape(w).exponents()] += 1; });
    return dist;
}

bool codes_equivalent(const NrtCode& c1, const NrtCode& c2, uint64_t iso_cap, uint64_t enum_cap) {
    if (!c1.same_space(c2)) throw std::invalid_argument("codes_equivalent: parameter mismatch");
    if (c1.k() != c2.k()) return false;
    if (shape_distribution(c1, enum_cap) != shape_distribution(c2, enum_cap)) return false;

    std::vector<NrtWord> gens;
    for (uint32_t i = 0; i < c1.k(); ++i) gens.push_back(c1.gen_word(i));

    bool found = false;
    for_each_isometry(c1.n(), c1.s(), c1.q(), iso_cap, [&](const NrtIsometry& iso) {
        if (found) return;
        std::vector<gf::Row> img;
        img.reserve(gens.size());
        for (const auto& g : gens) img.push_back(apply_isometry(iso, g).e);
        gf::rref(img, c1.q());
        if (img == c2.gen()) found = true;
    });
    return found;
}

void for_each_code_of_dim(uint32_t q, uint32_t n, uint32_t s, uint32_t k,
                          const std::function<void(const NrtCode&)>& fn) {
    check_params(q, n, s);
    uint32_t d = n * s;
    if (k > d) throw std::invalid_argument("for_each_code_of_dim: k exceeds length");
    if (k == 0) {
        fn(zero_code(q, n, s));
        return;
    }

    // Choose pivot columns, then run an odometer over the free entries:
    // entry (i, j) is free iff j > pivot[i] and j is not itself a pivot.
    std::vector<uint32_t> pivots(k);
    std::iota(pivots.begin(), pivots.end(), 0u);
    while (true) {
        std::vector<bool> is_pivot(d, false);
        for (uint32_t c : pivots) is_pivot[c] = true;
        std::vector<std::pair<uint32_t, uint32_t>> free_cells;
        for (uint32_t i = 0; i < k; ++i)
            for (uint32_t j = pivots[i] + 1; j < d; ++j)
                if (!is_pivot[j]) free_cells.emplace_back(i, j);

        std::vector<gf::Row> m(k, gf::Row(d, 0));
        for (uint32_t i = 0; i < k; ++i) m[i][pivots[i]] = 1;
        std::vector<uint8_t> vals(free_cells.size(), 0);
        while (true) {
            fn(NrtCode(q, n, s, m));
            size_t t = 0;
            for (; t < vals.size(); ++t) {
                auto [i, j] = free_cells[t];
                if (++vals[t] < q) {
                    m[i][j] = vals[t];
                    break;
                }
                vals[t] = 0;
                m[i][j] = 0;
            }
            if (t == vals.size()) break;
        }

        // next pivot combination (lexicographic)
        int move = static_cast<int>(k) - 1;
        while (move >= 0 && pivots[move] == d - k + move) --move;
        if (move < 0) break;
        ++pivots[move];
        for (uint32_t i = move + 1; i < k; ++i) pivots[i] = pivots[i - 1] + 1;
    }
}

void for_each_code(uint32_t q, uint32_t n, uint32_t s, const std::function<void(const NrtCode&)>& fn) {
    for (uint32_t k = 0; k <= n * s; ++k) for_each_code_of_dim(q, n, s, k, fn);
}

NrtCode read_code(std::istream& in) {
    std::string line;
    size_t lineno = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        return false;
    };

    if (!next_line()) throw std::runtime_error("code file: missing header line");
    std::istringstream head(line);
    long q = 0, n = 0, s = 0;
    if (!(head >> q >> n >> s) || q < 2 || n < 1 || s < 1)
        throw std::runtime_error("code file line " + std::to_string(lineno) + ": expected header 'q n s'");
    std::string extra;
    if (head >> extra) throw std::runtime_error("code file line " + std::to_string(lineno) + ": trailing tokens in header");
    check_params(static_cast<uint32_t>(q), static_cast<uint32_t>(n), static_cast<uint32_t>(s));

    std::vector<gf::Row> rows;
    size_t width = size_t(n) * size_t(s);
    while (next_line()) {
        std::istringstream ls(line);
        gf::Row row;
        long v;
        while (ls >> v) {
            if (v < 0 || v >= q)
                throw std::runtime_error("code file line " + std::to_string(lineno) + ": entry " + std::to_string(v) +
                                         " outside [0," + std::to_string(q) + ")");
            row.push_back(static_cast<uint8_t>(v));
        }
        if (!ls.eof())
            throw std::runtime_error("code file line " + std::to_string(lineno) + ": non-integer token");
        if (row.size() != width)
            throw std::runtime_error("code file line " + std::to_string(lineno) + ": expected " + std::to_string(width) +
                                     " entries, got " + std::to_string(row.size()));
        rows.push_back(std::move(row));
    }
    return code_from_flat_rows(static_cast<uint32_t>(q), static_cast<uint32_t>(n), static_cast<uint32_t>(s), rows);
}

NrtCode read_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open code file: " + path);
    return read_code(in);
}

void write_code(std::ostream& out, const NrtCode& c) {
    out << c.q() << " " << c.n() << " " << c.s() << "\n";
    for (const auto& row : c.gen()) {
        for (size_t j = 0; j < row.size(); ++j) {
            if (j) out << " ";
            out << unsigned(row[j]);
        }
        out << "\n";
    }
}

void write_code_file(const std::string& path, const NrtCode& c) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    write_code(out, c);
}

}  // namespace nrt

#include "nrt/constructions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace nrt {

gf::Row flip_vector(const gf::Row& v) { return {v.rbegin(), v.rend()}; }

std::vector<gf::Row> flip_matrix(const std::vector<gf::Row>& a) {
    std::vector<gf::Row> out;
    out.reserve(a.size());
    for (const auto& row : a) out.push_back(flip_vector(row));
    return out;
}

std::vector<gf::Row> flip_transpose(const std::vector<gf::Row>& a) {
    std::vector<gf::Row> f = flip_matrix(a);
    if (f.empty()) return {};
    std::vector<gf::Row> t(f[0].size(), gf::Row(f.size()));
    for (size_t i = 0; i < f.size(); ++i)
        for (size_t j = 0; j < f[i].size(); ++j) t[j][i] = f[i][j];
    return t;
}

std::vector<gf::Row> ordered_flip(const std::vector<gf::Row>& g, uint32_t n, uint32_t s) {
    std::vector<gf::Row> out;
    out.reserve(g.size());
    for (const auto& row : g) {
        if (row.size() != size_t(n) * s) throw std::invalid_argument("ordered_flip: row width mismatch");
        gf::Row r(row.size());
        for (uint32_t b = 0; b < n; ++b)
            for (uint32_t j = 0; j < s; ++j) r[size_t(b) * s + j] = row[size_t(b) * s + (s - 1 - j)];
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<gf::Row> od_transpose(const std::vector<gf::Row>& g, uint32_t n, uint32_t s) {
    std::vector<gf::Row> of = ordered_flip(g, n, s);
    if (of.empty()) return {};
    std::vector<gf::Row> t(of[0].size(), gf::Row(of.size()));
    for (size_t i = 0; i < of.size(); ++i)
        for (size_t j = 0; j < of[i].size(); ++j) t[j][i] = of[i][j];
    return t;
}

std::vector<gf::Row> g_god_product(const NrtCode& c) {
    std::vector<gf::Row> god = od_transpose(c.gen(), c.n(), c.s());
    std::vector<gf::Row> out(c.k(), gf::Row(c.k(), 0));
    for (uint32_t i = 0; i < c.k(); ++i)
        for (uint32_t j = 0; j < c.k(); ++j) {
            uint32_t acc = 0;
            for (uint32_t t = 0; t < c.length(); ++t) acc = (acc + uint32_t(c.gen()[i][t]) * god[t][j]) % c.q();
            out[i][j] = static_cast<uint8_t>(acc);
        }
    return out;
}

bool g_god_is_zero(const NrtCode& c) {
    for (const auto& row : g_god_product(c))
        for (uint8_t x : row)
            if (x != 0) return false;
    return true;
}

NrtCode hamming_dual(const NrtCode& c) {
    std::vector<gf::Row> basis = gf::nullspace(c.gen(), c.length(), c.q());
    return {c.q(), c.n(), c.s(), std::move(basis)};
}

bool is_hamming_self_orthogonal(const NrtCode& c) {
    for (uint32_t a = 0; a < c.k(); ++a)
        for (uint32_t b = a; b < c.k(); ++b) {
            uint32_t acc = 0;
            for (uint32_t t = 0; t < c.length(); ++t) acc = (acc + uint32_t(c.gen()[a][t]) * c.gen()[b][t]) % c.q();
            if (acc != 0) return false;
        }
    return true;
}

bool is_hamming_self_dual(const NrtCode& c) { return 2 * c.k() == c.length() && is_hamming_self_orthogonal(c); }

namespace {

// Postcondition guard shared by all constructions.
NrtCode finish(NrtCode code, uint32_t expected_k, bool expect_self_dual, const char* who) {
    if (code.k() != expected_k)
        throw std::logic_error(std::string(who) + ": dimension " + std::to_string(code.k()) +
                               " != expected " + std::to_string(expected_k));
    if (!is_self_orthogonal(code))
        throw std::domain_error(std::string(who) + ": output is not self-orthogonal");
    if (expect_self_dual && !is_self_dual(code))
        throw std::logic_error(std::string(who) + ": output is not self-dual");
    return code;
}

gf::Row concat(const gf::Row& a, const gf::Row& b) {
    gf::Row r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

}  // namespace

NrtCode construct_co(const NrtCode& c) {
    if (c.n() != 1) throw std::invalid_argument("construct_co: input must live in M_{1,s}");
    NrtCode dual = hamming_dual(c);
    uint32_t s = c.s();
    std::vector<gf::Row> rows;
    gf::Row zero(s, 0);
    for (const auto& v : c.gen()) rows.push_back(concat(v, zero));
    for (const auto& u : dual.gen()) rows.push_back(concat(zero, flip_vector(u)));
    NrtCode out = code_from_flat_rows(c.q(), 1, 2 * s, rows);
    // dim = k + k^perp = s, which is half of the new length 2s: the output is
    // in fact always self-dual, not merely self-orthogonal.
    return finish(std::move(out), c.k() + dual.k(), false, "construct_co");
}

NrtCode construct_cort(const NrtCode& c) {
    if (c.n() != 1) throw std::invalid_argument("construct_cort: input must live in M_{1,s}");
    if (!is_hamming_self_orthogonal(c))
        throw std::invalid_argument("construct_cort: input is not Hamming self-orthogonal");
    std::vector<gf::Row> rows;
    for (const auto& v : c.gen()) rows.push_back(concat(v, flip_vector(v)));
    NrtCode out = code_from_flat_rows(c.q(), 1, 2 * c.s(), rows);
    return finish(std::move(out), c.k(), false, "construct_cort");
}

NrtCode construct_cn(const NrtCode& c) {
    if (c.n() != 1) throw std::invalid_argument("construct_cn: input must live in M_{1,s}");
    if (!is_hamming_self_dual(c)) throw std::invalid_argument("construct_cn: input is not Hamming self-dual");
    uint32_t s = c.s();
    std::vector<gf::Row> rows;
    gf::Row zero(s, 0);
    for (const auto& v : c.gen()) rows.push_back(concat(v, zero));
    for (const auto& v : c.gen()) rows.push_back(concat(zero, flip_vector(v)));
    NrtCode out = code_from_flat_rows(c.q(), 1, 2 * s, rows);
    return finish(std::move(out), 2 * c.k(), true, "construct_cn");
}

NrtCode construct_interleave(const NrtCode& c1, const NrtCode& c2) {
    if (!c1.same_space(c2)) throw std::invalid_argument("construct_interleave: parameter mismatch");
    if (!is_self_orthogonal(c1) || !is_self_orthogonal(c2))
        throw std::invalid_argument("construct_interleave: inputs must be self-orthogonal");
    uint32_t n = c1.n(), s = c1.s();
    auto place = [&](const gf::Row& src, uint32_t parity) {
        gf::Row r(size_t(2) * n * s, 0);
        for (uint32_t b = 0; b < n; ++b)
            for (uint32_t j = 0; j < s; ++j) r[size_t(2 * b + parity) * s + j] = src[size_t(b) * s + j];
        return r;
    };
    std::vector<gf::Row> rows;
    for (const auto& g : c1.gen()) rows.push_back(place(g, 0));
    for (const auto& g : c2.gen()) rows.push_back(place(g, 1));
    NrtCode out = code_from_flat_rows(c1.q(), 2 * n, s, rows);
    bool both_self_dual = is_self_dual(c1) && is_self_dual(c2);
    return finish(std::move(out), c1.k() + c2.k(), both_self_dual, "construct_interleave");
}

NrtCode construct_padded_concat(const std::vector<NrtCode>& codes) {
    if (codes.empty()) throw std::invalid_argument("construct_padded_concat: no inputs");
    uint32_t q = codes[0].q();
    uint32_t s_bar = 0, n_bar = 0, n_total = 0, k_total = 0;
    for (const auto& c : codes) {
        if (c.q() != q) throw std::invalid_argument("construct_padded_concat: field mismatch");
        if (!is_self_orthogonal(c)) throw std::invalid_argument("construct_padded_concat: inputs must be self-orthogonal");
        s_bar = std::max(s_bar, c.s());
        n_bar = std::max(n_bar, c.n());
        n_total += c.n();
        k_total += c.k();
    }
    if (k_total > n_bar * s_bar)
        throw std::invalid_argument("construct_padded_concat: dimension bound k <= max(n)*max(s) violated");

    std::vector<gf::Row> rows;
    uint32_t block_offset = 0;
    for (const auto& c : codes) {
        for (const auto& g : c.gen()) {
            gf::Row r(size_t(n_total) * s_bar, 0);
            for (uint32_t b = 0; b < c.n(); ++b)
                for (uint32_t j = 0; j < c.s(); ++j)
                    r[size_t(block_offset + b) * s_bar + j] = g[size_t(b) * c.s() + j];
            rows.push_back(std::move(r));
        }
        block_offset += c.n();
    }
    NrtCode out = code_from_flat_rows(q, n_total, s_bar, rows);
    return finish(std::move(out), k_total, false, "construct_padded_concat");
}

namespace {

NrtCode family_code(uint32_t q, uint32_t n, uint32_t s, std::vector<std::vector<long>> rows, uint32_t lambda) {
    std::vector<gf::Row> flat;
    for (const auto& row : rows) {
        gf::Row r;
        for (long v : row) {
            long val = v == -1 ? lambda : (v == -2 ? (1 + lambda) % q : v);  // -1 = lambda, -2 = 1+lambda
            r.push_back(static_cast<uint8_t>(((val % q) + q) % q));
        }
        flat.push_back(std::move(r));
    }
    return code_from_flat_rows(q, n, s, flat);
}

}  // namespace

std::vector<ClassifiedCode> classify_ns4(uint32_t q, uint32_t q_cap) {
    if (!is_prime(q)) throw std::domain_error("classify_ns4: q must be prime");
    if (q > q_cap) throw cap_exceeded("classify_ns4: q exceeds cap " + std::to_string(q_cap));

    std::vector<ClassifiedCode> out;
    auto emit = [&](const std::string& case_name, unsigned family, uint32_t lambda, NrtCode code) {
        if (!is_self_dual(code))
            throw std::logic_error("classify_ns4: emitted case " + case_name + " family " +
                                   std::to_string(family) + " is not self-dual");
        out.push_back({case_name, family, lambda, std::move(code)});
    };

    // Case i: n = 1, s = 4. Families 5..8 carry the lambda parameter (-1).
    std::vector<std::vector<std::vector<long>>> case_i = {
        {{1, 0, 0, 0}, {0, 1, 0, 0}},  {{1, 0, 0, 0}, {0, 0, 1, 0}},
        {{0, 1, 0, 0}, {0, 0, 0, 1}},  {{0, 0, 1, 0}, {0, 0, 0, 1}},
        {{1, 0, -1, 0}, {0, 0, 1, 0}}, {{1, -1, 0, 0}, {0, 1, 0, 0}},
        {{0, 1, 0, -1}, {0, 0, 0, 1}}, {{0, 0, 1, -1}, {0, 0, 0, 1}},
    };
    for (unsigned f = 0; f < case_i.size(); ++f) {
        bool has_lambda = f >= 4;
        if (!has_lambda) {
            emit("i", f + 1, 0, family_code(q, 1, 4, case_i[f], 0));
        } else {
            for (uint32_t lam = 1; lam < q; ++lam) emit("i", f + 1, lam, family_code(q, 1, 4, case_i[f], lam));
        }
    }

    // Case ii: n = 2, s = 2. Families 9..12 carry 1 + lambda (-2).
    std::vector<std::vector<std::vector<long>>> case_ii = {
        {{1, 0, 0, 0}, {0, 0, 1, 0}},   {{1, 0, 0, 0}, {0, 0, 0, 1}},
        {{0, 1, 0, 0}, {0, 0, 1, 0}},   {{0, 1, 0, 0}, {0, 0, 0, 1}},
        {{0, 1, 1, 0}, {0, 0, 1, 0}},   {{0, 1, 0, 1}, {0, 0, 0, 1}},
        {{1, 0, 1, 0}, {0, 0, 1, 0}},   {{1, 0, 0, 1}, {0, 0, 0, 1}},
        {{0, 1, -2, 0}, {0, 0, 1, 0}},  {{0, 1, 0, -2}, {0, 0, 0, 1}},
        {{1, 0, -2, 0}, {0, 0, 1, 0}},  {{1, 0, 0, -2}, {0, 0, 0, 1}},
    };
    for (unsigned f = 0; f < case_ii.size(); ++f) {
        bool has_lambda = f >= 8;
        if (!has_lambda) {
            emit("ii", f + 1, 0, family_code(q, 2, 2, case_ii[f], 0));
        } else {
            for (uint32_t lam = 1; lam < q; ++lam) emit("ii", f + 1, lam, family_code(q, 2, 2, case_ii[f], lam));
        }
    }

    // Case iii: n = 4, s = 1 (Hamming); brute force over 2-dim subspaces.
    unsigned family = 0;
    for (const auto& c : all_self_dual_codes(q, 4, 1)) {
        ++family;
        emit("iii", family, 0, c);
    }
    return out;
}

std::vector<NrtCode> distinct_codes(const std::vector<ClassifiedCode>& list) {
    std::set<NrtCode> seen;
    std::vector<NrtCode> out;
    for (const auto& c : list)
        if (seen.insert(c.code).second) out.push_back(c.code);
    return out;
}

std::vector<NrtCode> all_self_dual_codes(uint32_t q, uint32_t n, uint32_t s) {
    if ((n * s) % 2 != 0) throw std::invalid_argument("all_self_dual_codes: ns must be even");
    std::vector<NrtCode> out;
    for_each_code_of_dim(q, n, s, n * s / 2, [&](const NrtCode& c) {
        if (is_self_orthogonal(c)) out.push_back(c);
    });
    return out;
}

}  // namespace nrt

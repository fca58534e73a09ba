#include "nrt/invariants.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "nrt/shape_enum.hpp"

namespace nrt {

std::vector<size_t> quad_rref(std::vector<std::vector<QuadElement>>& m) {
    std::vector<size_t> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = r;
        while (sel < rows && m[sel][c].is_zero()) ++sel;
        if (sel == rows) continue;
        std::swap(m[r], m[sel]);
        QuadElement inv = m[r][c].inverse();
        for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            QuadElement f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    m.resize(r);
    return pivots;
}

MatrixGroup group_closure(const std::vector<DenseMatrix>& generators, size_t cap) {
    if (generators.empty()) throw std::invalid_argument("group_closure: no generators");
    size_t dim = generators[0].rows();
    for (const auto& g : generators)
        if (!g.is_square() || g.rows() != dim)
            throw std::invalid_argument("group_closure: generators must be square of equal size");

    MatrixGroup group;
    group.dim = dim;
    group.generators = generators;

    std::map<DenseMatrix, size_t> seen;
    std::vector<DenseMatrix> frontier;
    auto push = [&](const DenseMatrix& m) {
        if (seen.emplace(m, group.elements.size()).second) {
            group.elements.push_back(m);
            frontier.push_back(m);
            if (group.elements.size() > cap)
                throw cap_exceeded("group_closure: closure exceeds cap " + std::to_string(cap) +
                                   " (infinite or too-large group?)");
        }
    };

    push(DenseMatrix::identity(dim));
    for (const auto& g : generators) push(g);
    while (!frontier.empty()) {
        std::vector<DenseMatrix> work;
        work.swap(frontier);
        for (const auto& w : work)
            for (const auto& g : generators) {
                push(w * g);
                push(g * w);
            }
    }

    // Sanity: every element must have its inverse in the set.
    for (const auto& x : group.elements) {
        bool has_inverse = false;
        for (const auto& y : group.elements)
            if (x * y == DenseMatrix::identity(dim)) {
                has_inverse = true;
                break;
            }
        if (!has_inverse) throw std::logic_error("group_closure: element without inverse (not a group)");
    }
    return group;
}

MolienSeries molien_series(const MatrixGroup& g, unsigned D) {
    RationalFunction sum;
    for (const auto& a : g.elements) {
        QuadPoly dp = det_poly(a);
        if (!dp.is_rational())
            throw std::domain_error("molien_series: det(I - L*A) has irrational coefficients");
        sum = sum + RationalFunction::one_over(dp.to_unipoly());
    }
    MolienSeries ms;
    ms.closed = sum.scale(Rational(Int(1), Int(static_cast<long>(g.order()))));
    std::vector<Rational> c = series_expand(ms.closed, D);
    ms.coeffs.reserve(c.size());
    for (const auto& x : c) {
        if (!x.is_integer() || x.sign() < 0)
            throw std::domain_error("molien_series: non-integer coefficient " + x.str() + " (implementation bug)");
        ms.coeffs.push_back(x.to_integer());
    }
    return ms;
}

Rational degree1_count(const MatrixGroup& g) {
    QuadElement total;
    for (const auto& a : g.elements) total += a.trace();
    QuadElement avg = total * QuadElement(Rational(Int(1), Int(static_cast<long>(g.order()))));
    return avg.to_rational();
}

MultiPoly reynolds(const MatrixGroup& g, const MultiPoly& f, ReynoldsMode mode) {
    if (f.vars() != g.dim) throw std::invalid_argument("reynolds: variable count must equal group dimension");
    MultiPoly total(f.vars());
    for (const auto& a : g.elements) total += substitute_linear(f, a);
    if (mode == ReynoldsMode::Average)
        total = total.scale(QuadElement(Rational(Int(1), Int(static_cast<long>(g.order())))));
    return total;
}

bool is_invariant(const MatrixGroup& g, const MultiPoly& f) {
    if (f.vars() != g.dim) throw std::invalid_argument("is_invariant: variable count must equal group dimension");
    for (const auto& a : g.elements)
        if (substitute_linear(f, a) != f) return false;
    return true;
}

std::vector<MultiPoly> invariant_space_basis(const MatrixGroup& g, unsigned d) {
    uint32_t m = static_cast<uint32_t>(g.dim);
    std::vector<Exponents> monos = monomials_of_degree(m, d);

    std::vector<std::vector<QuadElement>> rows;
    for (const auto& e : monos) {
        MultiPoly mono(m);
        mono.add_term(e, QuadElement(1));
        MultiPoly avg = reynolds(g, mono, ReynoldsMode::Average);
        std::vector<QuadElement> row(monos.size());
        for (size_t j = 0; j < monos.size(); ++j) row[j] = avg.coeff(monos[j]);
        rows.push_back(std::move(row));
    }
    quad_rref(rows);

    std::vector<MultiPoly> basis;
    for (const auto& row : rows) {
        MultiPoly p(m);
        for (size_t j = 0; j < monos.size(); ++j) p.add_term(monos[j], row[j]);
        basis.push_back(std::move(p));
    }

    Int expected = molien_series(g, d).coeff(d);
    if (Int(static_cast<long>(basis.size())) != expected)
        throw std::domain_error("invariant_space_basis: degree " + std::to_string(d) + " basis size " +
                                std::to_string(basis.size()) + " != Molien coefficient " + expected.get_str());
    return basis;
}

namespace {

// Rank of a QuadElement matrix.
size_t quad_rank(std::vector<std::vector<QuadElement>> m) { return quad_rref(m).size(); }

// Determinant of a square MultiPoly matrix by minor expansion (fallback path
// of the Jacobian criterion; sizes here are at most the variable count).
MultiPoly poly_det(const std::vector<std::vector<MultiPoly>>& m, std::vector<size_t> cols, uint32_t vars, size_t row) {
    if (cols.empty()) return MultiPoly::constant(vars, QuadElement(1));
    MultiPoly acc(vars);
    for (size_t t = 0; t < cols.size(); ++t) {
        const MultiPoly& cell = m[row][cols[t]];
        if (cell.is_zero()) continue;
        std::vector<size_t> rest;
        for (size_t u = 0; u < cols.size(); ++u)
            if (u != t) rest.push_back(cols[u]);
        MultiPoly sub = poly_det(m, rest, vars, row + 1);
        MultiPoly term = cell * sub;
        if (t % 2 == 1) term = -term;
        acc += term;
    }
    return acc;
}

}  // namespace

bool jacobian_independent(const std::vector<MultiPoly>& fs) {
    if (fs.empty()) return true;
    uint32_t m = fs[0].vars();
    if (fs.size() > m) return false;  // more polynomials than variables: always dependent
    std::vector<std::vector<MultiPoly>> J = jacobian_matrix(fs);

    // Five deterministic integer point sets; full rank at any one certifies
    // full rank over the fraction field.
    std::vector<std::vector<long>> points;
    {
        std::vector<long> p1, p2, p3, p4, p5;
        long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
        for (uint32_t i = 0; i < m; ++i) {
            p1.push_back(i + 1);
            p2.push_back(primes[i % 15]);
            p3.push_back(static_cast<long>((i + 1)) * (i + 1));
            p4.push_back(1L << (i + 1));
            long pw = 1;
            for (uint32_t t = 0; t < i; ++t) pw *= 3;
            p5.push_back(pw);
        }
        points = {p1, p2, p3, p4, p5};
    }
    for (const auto& pt : points) {
        std::vector<QuadElement> point;
        for (long v : pt) point.emplace_back(Rational(v));
        std::vector<std::vector<QuadElement>> num(fs.size(), std::vector<QuadElement>(m));
        for (size_t i = 0; i < fs.size(); ++i)
            for (uint32_t j = 0; j < m; ++j) num[i][j] = J[i][j].eval(point);
        if (quad_rank(std::move(num)) == fs.size()) return true;
    }

    // Symbolic fallback: some r x r minor must be a nonzero polynomial.
    std::vector<size_t> cols(fs.size());
    std::vector<bool> chosen(m, false);
    auto any_nonzero_minor = [&](auto&& self, size_t idx, size_t start) -> bool {
        if (idx == fs.size()) {
            return !poly_det(J, cols, m, 0).is_zero();
        }
        for (size_t c = start; c < m; ++c) {
            cols[idx] = c;
            if (self(self, idx + 1, c + 1)) return true;
        }
        return false;
    };
    return any_nonzero_minor(any_nonzero_minor, 0, 0);
}

MatrixGroup theta_group(uint32_t s) {
    DenseMatrix t = normalized_T(s);
    if (s % 2 == 0) return group_closure({t});
    DenseMatrix minus_i = DenseMatrix::identity(s + 1).scale(QuadElement(-1));
    return group_closure({t, minus_i});
}

RationalFunction closed_form_molien(uint32_t s) {
    if (s < 1) throw std::invalid_argument("closed_form_molien: s must be >= 1");
    UniPoly one(Rational(1));
    UniPoly lam2 = UniPoly::monomial(Rational(1), 2);
    UniPoly lam1 = UniPoly::monomial(Rational(1), 1);
    UniPoly one_minus_l2 = one - lam2;
    UniPoly one_minus_l = one - lam1;

    auto even_binomial_sum = [&](unsigned long nn) {
        // sum_l C(nn, 2l) L^{2l}
        UniPoly acc;
        for (unsigned long l = 0; 2 * l <= nn; ++l)
            acc = acc + UniPoly::monomial(Rational(binomial(nn, 2 * l)), static_cast<unsigned>(2 * l));
        return acc;
    };

    if (s % 2 == 1) {
        uint32_t h = (s + 1) / 2;
        if (h % 2 == 0) {
            uint32_t t = h / 2;
            UniPoly num = even_binomial_sum(2 * t);
            return {num * num, one_minus_l2.pow(4 * t)};
        }
        uint32_t t = (h - 1) / 2;
        UniPoly num = even_binomial_sum(2 * t + 1);
        return {num * num, one_minus_l2.pow(4 * t + 2)};
    }
    uint32_t h = s / 2;
    if (h % 2 == 0) {
        uint32_t t = h / 2;
        return {even_binomial_sum(2 * t), one_minus_l2.pow(2 * t) * one_minus_l.pow(2 * t + 1)};
    }
    uint32_t t = (h - 1) / 2;
    return {even_binomial_sum(2 * t + 1), one_minus_l2.pow(2 * t + 1) * one_minus_l.pow(2 * t + 2)};
}

std::vector<const BasisEntry*> KnownBasis::primaries() const {
    std::vector<const BasisEntry*> out;
    for (const auto& e : entries)
        if (e.kind == BasisKind::Primary) out.push_back(&e);
    return out;
}

std::vector<const BasisEntry*> KnownBasis::secondaries() const {
    std::vector<const BasisEntry*> out;
    for (const auto& e : entries)
        if (e.kind == BasisKind::Secondary) out.push_back(&e);
    return out;
}

namespace {

MultiPoly parse3(const std::string& text) { return MultiPoly::parse(text, 3); }

DenseMatrix diag3(long a, long b, long c) {
    DenseMatrix m(3, 3);
    m.at(0, 0) = QuadElement(a);
    m.at(1, 1) = QuadElement(b);
    m.at(2, 2) = QuadElement(c);
    return m;
}

// G3's secondary invariant: the degree-4 invariant space has dimension 4 and
// the products of degree-2 invariants span only 3 of them; phi4 is the
// canonical RREF representative of the missing direction.
MultiPoly compute_phi4(const MatrixGroup& g3) {
    std::vector<MultiPoly> j2 = invariant_space_basis(g3, 2);
    std::vector<MultiPoly> j4 = invariant_space_basis(g3, 4);

    std::vector<Exponents> monos = monomials_of_degree(3, 4);
    auto coeff_row = [&](const MultiPoly& p) {
        std::vector<QuadElement> row(monos.size());
        for (size_t j = 0; j < monos.size(); ++j) row[j] = p.coeff(monos[j]);
        return row;
    };

    std::vector<std::vector<QuadElement>> products;
    for (size_t a = 0; a < j2.size(); ++a)
        for (size_t b = a; b < j2.size(); ++b) products.push_back(coeff_row(j2[a] * j2[b]));
    quad_rref(products);

    for (const auto& cand : j4) {
        // Reduce the candidate against the product span.
        std::vector<QuadElement> v = coeff_row(cand);
        size_t col = 0;
        for (const auto& row : products) {
            while (col < monos.size() && row[col].is_zero()) ++col;  // pivot column of this row
            if (col == monos.size()) break;
            if (!v[col].is_zero()) {
                QuadElement f = v[col];
                for (size_t j = 0; j < monos.size(); ++j) v[j] -= f * row[j];
            }
        }
        bool zero = std::all_of(v.begin(), v.end(), [](const QuadElement& x) { return x.is_zero(); });
        if (zero) continue;
        // Normalize leading coefficient to 1.
        QuadElement lead;
        for (const auto& x : v)
            if (!x.is_zero()) {
                lead = x;
                break;
            }
        MultiPoly phi4(3);
        QuadElement inv = lead.inverse();
        for (size_t j = 0; j < monos.size(); ++j) phi4.add_term(monos[j], v[j] * inv);
        return phi4;
    }
    throw std::logic_error("compute_phi4: no degree-4 invariant outside the degree-2 product span");
}

}  // namespace

KnownBasis known_basis(const std::string& name) {
    DenseMatrix t = normalized_T(2);
    KnownBasis b;
    if (name == "g1" || name == "G1") {
        b.group_name = "G1";
        b.group = group_closure({t});
        b.entries = {
            {"phi1", parse3("z0 + z2"), 1, BasisKind::Primary},
            {"phi2", parse3("z0 + z1"), 1, BasisKind::Primary},
            {"phi3", parse3("z0^2 + z1^2 + 2*z2^2"), 2, BasisKind::Primary},
        };
        return b;
    }
    if (name == "g2" || name == "G2") {
        b.group_name = "G2";
        b.group = group_closure({t, diag3(1, -1, 1)});
        b.entries = {
            {"p1", parse3("z0 + z2"), 1, BasisKind::Primary},
            {"p2", parse3("z0^2 + z1^2 + 2*z2^2"), 2, BasisKind::Primary},
            {"p3", parse3("z0^3 + 3*z0*z1^2 + 4*z2^3"), 3, BasisKind::Primary},
        };
        return b;
    }
    if (name == "g3" || name == "G3") {
        b.group_name = "G3";
        b.group = group_closure({t, diag3(1, -1, -1)});
        MultiPoly star = parse3("2*z0^2 - 2*z1^2 + 8*z1*z2");
        b.star = star;
        b.entries = {
            {"phi1", parse3("z0^2 + z1^2 + 2*z2^2"), 2, BasisKind::Primary},
            // Catalogued form; algebraically independent of phi1/star but not
            // itself G3-invariant (the degree-2 invariant space is 2-dim).
            {"phi2", parse3("5*z0^2 - 2*z0*z1 + z1^2 + 8*z2^2 + 8*z2*z1"), 2, BasisKind::Primary},
            {"phi3", star.pow(3), 6, BasisKind::Primary},
            {"phi4", compute_phi4(b.group), 4, BasisKind::Secondary},
        };
        return b;
    }
    throw std::invalid_argument("known_basis: unknown group '" + name + "' (expected g1, g2 or g3)");
}

std::vector<KnownBasis> known_bases() { return {known_basis("g1"), known_basis("g2"), known_basis("g3")}; }

std::string BasisCombination::str(const KnownBasis& basis) const {
    if (terms.empty()) return "0";
    auto prims = basis.primaries();
    auto secs = basis.secondaries();
    std::string out;
    bool first = true;
    for (const auto& t : terms) {
        std::string prod;
        for (size_t i = 0; i < t.powers.size(); ++i) {
            if (t.powers[i] == 0) continue;
            if (!prod.empty()) prod += "*";
            prod += prims[i]->name;
            if (t.powers[i] > 1) prod += "^" + std::to_string(t.powers[i]);
        }
        if (t.secondary >= 0) {
            std::string sname = secs[static_cast<size_t>(t.secondary)]->name;
            prod = prod.empty() ? sname : sname + "*" + prod;
        }
        QuadElement c = t.coeff;
        bool neg = c.is_rational() && c.a().sign() < 0;
        if (neg) c = -c;
        std::string cs = c.str_factor();
        std::string term = prod.empty() ? cs : (cs == "1" ? prod : cs + "*" + prod);
        if (first) {
            out = (neg ? "-" : "") + term;
            first = false;
        } else {
            out += (neg ? " - " : " + ") + term;
        }
    }
    return out;
}

namespace {

void enumerate_power_vectors(const std::vector<uint32_t>& degrees, uint32_t target,
                             std::vector<uint32_t>& cur, size_t idx,
                             std::vector<std::vector<uint32_t>>& out) {
    if (idx == degrees.size()) {
        if (target == 0) out.push_back(cur);
        return;
    }
    for (uint32_t a = 0; a * degrees[idx] <= target; ++a) {
        cur[idx] = a;
        enumerate_power_vectors(degrees, target - a * degrees[idx], cur, idx + 1, out);
    }
    cur[idx] = 0;
}

}  // namespace

BasisCombination express_in_basis(const MultiPoly& h, const KnownBasis& basis) {
    if (!h.is_homogeneous()) throw std::invalid_argument("express_in_basis: input must be homogeneous");
    if (h.is_zero()) return {};
    uint32_t d = static_cast<uint32_t>(h.total_degree());
    auto prims = basis.primaries();
    auto secs = basis.secondaries();
    std::vector<uint32_t> degs;
    for (const auto* p : prims) degs.push_back(p->degree);

    struct Product {
        std::vector<uint32_t> powers;
        int secondary;
        MultiPoly value;
    };
    std::vector<Product> products;

    auto add_products = [&](uint32_t target, int sec) {
        std::vector<std::vector<uint32_t>> vecs;
        std::vector<uint32_t> cur(degs.size(), 0);
        enumerate_power_vectors(degs, target, cur, 0, vecs);
        for (const auto& v : vecs) {
            MultiPoly val = sec >= 0 ? secs[static_cast<size_t>(sec)]->poly
                                     : MultiPoly::constant(h.vars(), QuadElement(1));
            for (size_t i = 0; i < v.size(); ++i)
                if (v[i] > 0) val = val * prims[i]->poly.pow(v[i]);
            products.push_back({v, sec, std::move(val)});
        }
    };
    add_products(d, -1);
    for (size_t j = 0; j < secs.size(); ++j)
        if (secs[j]->degree <= d) add_products(d - secs[j]->degree, static_cast<int>(j));

    if (products.empty())
        throw std::domain_error("express_in_basis: no basis products of degree " + std::to_string(d));

    // Solve sum x_t * product_t = h on coefficient vectors.
    std::vector<Exponents> monos = monomials_of_degree(h.vars(), d);
    size_t rows = monos.size(), cols = products.size();
    std::vector<std::vector<QuadElement>> aug(rows, std::vector<QuadElement>(cols + 1));
    for (size_t i = 0; i < rows; ++i) {
        for (size_t t = 0; t < cols; ++t) aug[i][t] = products[t].value.coeff(monos[i]);
        aug[i][cols] = h.coeff(monos[i]);
    }
    std::vector<size_t> pivots = quad_rref(aug);

    std::vector<QuadElement> x(cols);
    for (size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == cols)
            throw std::domain_error("express_in_basis: no solution (input not invariant, or wrong basis)");
        x[pivots[r]] = aug[r][cols];
    }

    BasisCombination combo;
    for (size_t t = 0; t < cols; ++t)
        if (!x[t].is_zero()) combo.terms.push_back({products[t].powers, products[t].secondary, x[t]});

    // Round-trip guard (free variables were set to zero above).
    if (combination_value(combo, basis) != h)
        throw std::domain_error("express_in_basis: no solution (input not invariant, or wrong basis)");
    return combo;
}

MultiPoly combination_value(const BasisCombination& c, const KnownBasis& basis) {
    auto prims = basis.primaries();
    auto secs = basis.secondaries();
    uint32_t vars = basis.entries.empty() ? 0 : basis.entries.front().poly.vars();
    MultiPoly total(vars);
    for (const auto& t : c.terms) {
        MultiPoly val = MultiPoly::constant(vars, t.coeff);
        for (size_t i = 0; i < t.powers.size(); ++i)
            if (t.powers[i] > 0) val = val * prims[i]->poly.pow(t.powers[i]);
        if (t.secondary >= 0) val = val * secs[static_cast<size_t>(t.secondary)]->poly;
        total += val;
    }
    return total;
}

}  // namespace nrt

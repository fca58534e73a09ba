#include "nrt/shape_enum.hpp"

#include <sstream>

namespace nrt {

ShapeEnumerator shape_enumerator(const NrtCode& c, uint64_t cap) {
    ShapeEnumerator h;
    h.s = c.s();
    h.n = c.n();
    MultiPoly poly(c.s() + 1);
    enumerate_codewords(c, cap, [&](const NrtWord& w) {
        poly.add_term(shape(w).exponents(), QuadElement(1));
    });
    h.poly = std::move(poly);
    return h;
}

ThetaMatrix theta_matrix(uint32_t s, uint32_t q) {
    if (s < 1) throw std::invalid_argument("theta_matrix: s must be >= 1");
    if (q < 2) throw std::invalid_argument("theta_matrix: q must be >= 2");
    ThetaMatrix t;
    t.s = s;
    t.q = q;
    t.a.assign(s + 1, std::vector<Int>(s + 1, 0));
    for (uint32_t l = 0; l <= s; ++l) {
        for (uint32_t k = 0; k <= s; ++k) {
            if (k == 0) {
                t.a[l][k] = 1;
            } else if (k <= s - l) {
                t.a[l][k] = ipow(Int(q), k - 1) * (q - 1);
            } else if (l + k == s + 1) {
                t.a[l][k] = -ipow(Int(q), k - 1);
            } else {
                t.a[l][k] = 0;
            }
        }
    }
    return t;
}

DenseMatrix ThetaMatrix::dense() const {
    DenseMatrix m(s + 1, s + 1);
    for (uint32_t l = 0; l <= s; ++l)
        for (uint32_t k = 0; k <= s; ++k) m.at(l, k) = QuadElement(Rational(a[l][k]));
    return m;
}

std::string ThetaMatrix::str() const {
    std::string out;
    for (uint32_t l = 0; l <= s; ++l) {
        out += "[";
        for (uint32_t k = 0; k <= s; ++k) {
            if (k) out += ", ";
            out += a[l][k].get_str();
        }
        out += "]\n";
    }
    return out;
}

ShapeEnumerator macwilliams_transform(const ShapeEnumerator& h, uint32_t q, const Int& code_size) {
    if (code_size <= 0) throw std::invalid_argument("macwilliams_transform: code size must be positive");
    if (!h.poly.is_homogeneous()) throw std::invalid_argument("macwilliams_transform: enumerator must be homogeneous");
    DenseMatrix theta = theta_matrix(h.s, q).dense();
    MultiPoly img = substitute_linear(h.poly, theta).scale(QuadElement(Rational(Int(1), code_size)));

    for (const auto& [e, c] : img.terms()) {
        if (!c.is_rational() || !c.a().is_integer() || c.a().sign() < 0)
            throw std::domain_error(
                "macwilliams_transform: non-integer or negative output coefficient " + c.str() +
                " (malformed enumerator or wrong code size)");
    }
    ShapeEnumerator out;
    out.s = h.s;
    out.n = h.n;
    out.poly = std::move(img);
    return out;
}

bool ThetaReport::all_ok() const {
    for (const auto& c : checks)
        if (!c.ok) return false;
    return true;
}

namespace {

ThetaCheck check(const std::string& name, bool ok, const std::string& detail = "") {
    return ThetaCheck{name, ok, detail};
}

}  // namespace

ThetaReport verify_theta_properties(uint32_t s, uint32_t q) {
    if (q != 2) throw std::invalid_argument("verify_theta_properties: stated for q = 2 only");
    ThetaMatrix tm = theta_matrix(s, q);
    DenseMatrix theta = tm.dense();
    uint32_t dim = s + 1;

    ThetaReport rep;
    rep.s = s;

    // a) Theta^2 = 2^s I
    DenseMatrix sq = theta * theta;
    DenseMatrix expect_sq = DenseMatrix::identity(dim).scale(QuadElement(Rational(ipow(Int(2), s))));
    rep.checks.push_back(check("square", sq == expect_sq, "Theta^2 = 2^s I"));

    // b) trace
    Int tr = 0;
    for (uint32_t i = 0; i <= s; ++i) tr += tm.a[i][i];
    rep.trace = tr;
    Int expect_tr = (s % 2 == 0) ? ipow(Int(2), s / 2) : Int(0);
    rep.checks.push_back(check("trace", tr == expect_tr, "trace = " + expect_tr.get_str()));

    // c) determinant with sign
    QuadElement dq = det(theta);
    rep.det = dq.to_rational().to_integer();  // Theta is an integer matrix
    Int expect_det = ipow(Int(2), s * (s + 1) / 2);
    unsigned sign_exp = (s % 2 == 0) ? s / 2 : (s + 1) / 2;
    if (sign_exp % 2 == 1) expect_det = -expect_det;
    rep.checks.push_back(check("det", rep.det == expect_det, "det = " + expect_det.get_str()));

    // Spectrum: eigenvalues +-2^{s/2} with the stated multiplicities.
    uint32_t r1 = (s % 2 == 0) ? (s + 2) / 2 : (s + 1) / 2;
    uint32_t r2 = (s % 2 == 0) ? s / 2 : (s + 1) / 2;
    QuadElement beta = (s % 2 == 0) ? QuadElement(Rational(ipow(Int(2), s / 2)))
                                    : QuadElement(Rational(0), Rational(ipow(Int(2), (s - 1) / 2)));
    rep.spectrum = ThetaSpectrum{r1, r2, beta, -beta};

    // det(I - L*Theta) = (1 - beta L)^{r1} (1 + beta L)^{r2}
    QuadPoly lhs = det_poly(theta);
    QuadPoly one(QuadElement(1));
    QuadPoly minus_bl = QuadPoly(std::vector<QuadElement>{QuadElement(1), -beta});
    QuadPoly plus_bl = QuadPoly(std::vector<QuadElement>{QuadElement(1), beta});
    QuadPoly rhs = minus_bl.pow(r1) * plus_bl.pow(r2);
    rep.checks.push_back(check("charpoly", lhs == rhs,
                               "multiplicities r1=" + std::to_string(r1) + " r2=" + std::to_string(r2)));
    rep.checks.push_back(check("multiplicity_sum", r1 + r2 == dim, "r1 + r2 = s + 1"));

    // trace = r1*beta - r2*beta
    QuadElement tr_from_spec = beta * QuadElement(Rational(Int(r1)) - Rational(Int(r2)));
    rep.checks.push_back(check("trace_spectrum", tr_from_spec == QuadElement(Rational(tr)),
                               "r1*beta1 + r2*beta2 = trace"));

    // Minimal polynomial (L - b)(L + b): Theta^2 - 2^s I = 0 (checked above)
    // and Theta is not the scalar +-2^{s/2} I (entry (0,0) = 1 != +-2^{s/2}
    // for s >= 1, and the matrix is not diagonal).
    bool not_scalar = !(theta == DenseMatrix::identity(dim).scale(beta)) &&
                      !(theta == DenseMatrix::identity(dim).scale(-beta));
    rep.checks.push_back(check("minpoly", not_scalar, "(L-2^{s/2})(L+2^{s/2}), degree exactly 2"));

    return rep;
}

DenseMatrix normalized_T(uint32_t s) {
    DenseMatrix theta = theta_matrix(s, 2).dense();
    // 2^{-s/2}: rational for even s; for odd s, 2^{-s/2} = sqrt2 / 2^{(s+1)/2}.
    QuadElement factor = (s % 2 == 0)
                             ? QuadElement(Rational(Int(1), ipow(Int(2), s / 2)))
                             : QuadElement(Rational(0), Rational(Int(1), ipow(Int(2), (s + 1) / 2)));
    return theta.scale(factor);
}

}  // namespace nrt

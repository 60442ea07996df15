#include "stardef/finalg.hpp"

#include <bit>

namespace stardef {

AxiomError::AxiomError(std::string axiom, std::vector<std::size_t> witness)
    : std::invalid_argument([&] {
          std::string s = "axiom '" + axiom + "' fails on basis tuple (";
          for (std::size_t k = 0; k < witness.size(); ++k) s += (k ? "," : "") + std::to_string(witness[k]);
          return s + ")";
      }()),
      axiom_(std::move(axiom)), witness_(std::move(witness))
{
}

VectorQI basis_vector(const FiniteStarAlgebra& a, std::size_t i)
{
    VectorQI v = VectorQI::Constant(a.d(), QI(0));
    v(static_cast<Eigen::Index>(i)) = QI(1);
    return v;
}

VectorQI alg_mul(const FiniteStarAlgebra& a, const VectorQI& x, const VectorQI& y)
{
    const Eigen::Index d = a.d();
    VectorQI out = VectorQI::Constant(d, QI(0));
    for (Eigen::Index i = 0; i < d; ++i) {
        if (x(i).is_zero()) continue;
        for (Eigen::Index j = 0; j < d; ++j) {
            if (y(j).is_zero()) continue;
            const QI c = x(i) * y(j);
            for (Eigen::Index k = 0; k < d; ++k)
                if (!a.mu0(k, i * d + j).is_zero()) out(k) += c * a.mu0(k, i * d + j);
        }
    }
    return out;
}

VectorQI alg_star(const FiniteStarAlgebra& a, const VectorQI& x)
{
    const Eigen::Index d = a.d();
    VectorQI out = VectorQI::Constant(d, QI(0));
    for (Eigen::Index i = 0; i < d; ++i) {
        if (x(i).is_zero()) continue;
        const QI c = x(i).conj();
        for (Eigen::Index k = 0; k < d; ++k)
            if (!a.involution(k, i).is_zero()) out(k) += c * a.involution(k, i);
    }
    return out;
}

bool is_hermitian(const FiniteStarAlgebra& a, const VectorQI& x) { return alg_star(a, x) == x; }

FiniteStarAlgebra custom_algebra(std::string name, std::vector<std::string> labels, MatrixQI mu0, MatrixQI involution,
                                 std::optional<VectorQI> unit)
{
    FiniteStarAlgebra a;
    a.name = std::move(name);
    a.labels = std::move(labels);
    a.mu0 = std::move(mu0);
    a.involution = std::move(involution);
    a.unit = std::move(unit);
    const Eigen::Index d = a.d();
    const std::size_t du = a.dim();
    if (d == 0) throw std::invalid_argument("algebra dimension must be positive");
    if (a.mu0.rows() != d || a.mu0.cols() != d * d)
        throw std::invalid_argument("structure constants must have shape d x d^2");
    if (a.involution.rows() != d || a.involution.cols() != d) throw std::invalid_argument("involution must be d x d");
    if (a.unit && a.unit->size() != d) throw std::invalid_argument("unit must have d coordinates");

    std::vector<VectorQI> e;
    for (std::size_t i = 0; i < du; ++i) e.push_back(basis_vector(a, i));
    std::vector<std::vector<VectorQI>> prod(du, std::vector<VectorQI>(du));
    for (std::size_t i = 0; i < du; ++i)
        for (std::size_t j = 0; j < du; ++j) prod[i][j] = a.mu0.col(static_cast<Eigen::Index>(i * du + j));

    for (std::size_t i = 0; i < du; ++i)
        for (std::size_t j = 0; j < du; ++j)
            for (std::size_t k = 0; k < du; ++k)
                if (alg_mul(a, prod[i][j], e[k]) != alg_mul(a, e[i], prod[j][k]))
                    throw AxiomError("associativity", {i, j, k});
    for (std::size_t i = 0; i < du; ++i)
        if (alg_star(a, alg_star(a, e[i])) != e[i]) throw AxiomError("involutive", {i});
    for (std::size_t i = 0; i < du; ++i)
        for (std::size_t j = 0; j < du; ++j)
            if (alg_star(a, prod[i][j]) != alg_mul(a, alg_star(a, e[j]), alg_star(a, e[i])))
                throw AxiomError("anti-multiplicative", {i, j});
    if (a.unit) {
        for (std::size_t i = 0; i < du; ++i)
            if (alg_mul(a, *a.unit, e[i]) != e[i] || alg_mul(a, e[i], *a.unit) != e[i]) throw AxiomError("unit", {i});
    }
    return a;
}

FiniteStarAlgebra matrix_algebra(std::size_t n)
{
    if (n == 0) throw std::invalid_argument("matrix_algebra: n >= 1 required");
    const std::size_t d = n * n;
    const auto di = static_cast<Eigen::Index>(d);
    MatrixQI mu0 = zeros<QI>(di, di * di);
    MatrixQI inv = zeros<QI>(di, di);
    VectorQI unit = VectorQI::Constant(di, QI(0));
    std::vector<std::string> labels;
    auto idx = [n](std::size_t i, std::size_t j) { return static_cast<Eigen::Index>(i * n + j); };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
            inv(idx(j, i), idx(i, j)) = QI(1);
            for (std::size_t l = 0; l < n; ++l) mu0(idx(i, l), idx(i, j) * di + idx(j, l)) = QI(1);
        }
    for (std::size_t i = 0; i < n; ++i) unit(idx(i, i)) = QI(1);
    FiniteStarAlgebra a = custom_algebra("matrix:" + std::to_string(n), std::move(labels), std::move(mu0), std::move(inv), unit);
    a.kind = FiniteStarAlgebra::Kind::Matrix;
    a.param = n;
    return a;
}

FiniteStarAlgebra grassmann_algebra(std::size_t n)
{
    if (n == 0 || n > 6) throw std::invalid_argument("grassmann_algebra: 1 <= n <= 6 required");
    const std::size_t d = std::size_t(1) << n;
    const auto di = static_cast<Eigen::Index>(d);
    MatrixQI mu0 = zeros<QI>(di, di * di);
    MatrixQI inv = zeros<QI>(di, di);
    std::vector<std::string> labels;
    for (std::size_t s = 0; s < d; ++s) {
        std::string l;
        for (std::size_t k = 0; k < n; ++k)
            if (s >> k & 1) l += "e" + std::to_string(k + 1);
        labels.push_back(l.empty() ? "1" : l);
        const int r = std::popcount(s);
        inv(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(s)) = QI((r * (r - 1) / 2) % 2 ? -1 : 1);
        for (std::size_t t = 0; t < d; ++t) {
            if (s & t) continue;
            // Sign of sorting e_S e_T: pairs s in S, t in T with s > t.
            int inversions = 0;
            for (std::size_t k = 0; k < n; ++k)
                if (t >> k & 1) inversions += std::popcount(s >> (k + 1));
            mu0(static_cast<Eigen::Index>(s | t), static_cast<Eigen::Index>(s * d + t)) = QI(inversions % 2 ? -1 : 1);
        }
    }
    VectorQI unit = VectorQI::Constant(di, QI(0));
    unit(0) = QI(1);
    FiniteStarAlgebra a = custom_algebra("grassmann:" + std::to_string(n), std::move(labels), std::move(mu0), std::move(inv), unit);
    a.kind = FiniteStarAlgebra::Kind::Grassmann;
    a.param = n;
    return a;
}

FiniteStarAlgebra dual_numbers()
{
    MatrixQI mu0 = zeros<QI>(2, 4);
    mu0(0, 0) = QI(1);  // 1 1 = 1
    mu0(1, 1) = QI(1);  // 1 x = x
    mu0(1, 2) = QI(1);  // x 1 = x
    MatrixQI inv = identity_matrix<QI>(2);
    VectorQI unit(2);
    unit << QI(1), QI(0);
    FiniteStarAlgebra a = custom_algebra("dual", {"1", "x"}, std::move(mu0), std::move(inv), unit);
    a.kind = FiniteStarAlgebra::Kind::Dual;
    return a;
}

MatrixQI as_matrix(const FiniteStarAlgebra& a, const VectorQI& x)
{
    if (a.kind != FiniteStarAlgebra::Kind::Matrix) throw std::invalid_argument("not a matrix algebra");
    const auto n = static_cast<Eigen::Index>(a.param);
    MatrixQI m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) m(i, j) = x(i * n + j);
    return m;
}

VectorQI from_matrix(const FiniteStarAlgebra& a, const MatrixQI& m)
{
    if (a.kind != FiniteStarAlgebra::Kind::Matrix) throw std::invalid_argument("not a matrix algebra");
    const auto n = static_cast<Eigen::Index>(a.param);
    if (m.rows() != n || m.cols() != n) throw std::invalid_argument("matrix size does not match the algebra");
    VectorQI x(n * n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) x(i * n + j) = m(i, j);
    return x;
}

QI FiniteFunctional::operator()(const VectorQI& x) const
{
    if (x.size() != covector.size()) throw std::invalid_argument("functional arity mismatch");
    QI s(0);
    for (Eigen::Index i = 0; i < x.size(); ++i)
        if (!covector(i).is_zero() && !x(i).is_zero()) s += covector(i) * x(i);
    return s;
}

FiniteFunctional trace_functional(const FiniteStarAlgebra& a, const MatrixQI& rho)
{
    const auto n = static_cast<Eigen::Index>(a.param);
    if (a.kind != FiniteStarAlgebra::Kind::Matrix || rho.rows() != n || rho.cols() != n)
        throw std::invalid_argument("trace_functional: size mismatch");
    VectorQI c(n * n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) c(i * n + j) = rho(j, i);
    return {c};
}

FiniteFunctional vector_state(const FiniteStarAlgebra& a, const VectorQI& v)
{
    const auto n = static_cast<Eigen::Index>(a.param);
    if (a.kind != FiniteStarAlgebra::Kind::Matrix || v.size() != n) throw std::invalid_argument("vector_state: size mismatch");
    VectorQI c(n * n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) c(i * n + j) = v(i).conj() * v(j);
    return {c};
}

PsdCertificate psd_certificate(const MatrixQI& m)
{
    if (m.rows() != m.cols()) throw std::invalid_argument("psd_certificate: square matrix required");
    if (adjoint(m) != m) throw NotHermitian("matrix is not Hermitian");
    PsdCertificate cert;
    const auto coeffs = characteristic_polynomial<QI>(m);
    const std::size_t d = coeffs.size() - 1;
    cert.positive = true;
    for (std::size_t k = 0; k <= d; ++k) {
        if (!coeffs[k].is_real()) throw std::logic_error("characteristic polynomial of a Hermitian matrix is not real");
        cert.char_poly.push_back(coeffs[k].real());
        Rational s = (d - k) % 2 ? Rational(-coeffs[k].real()) : coeffs[k].real();
        if (s < 0 && cert.positive) {
            cert.positive = false;
            cert.failing_index = k;
        }
    }
    return cert;
}

PsdCertificate matrix_functional_positive(const MatrixQI& rho) { return psd_certificate(rho); }

PsdCertificate element_positive_matrix(const FiniteStarAlgebra& a, const VectorQI& x)
{
    return psd_certificate(as_matrix(a, x));
}

bool grassmann_functional_positive(const FiniteStarAlgebra& a, const FiniteFunctional& omega)
{
    if (a.kind != FiniteStarAlgebra::Kind::Grassmann) throw std::invalid_argument("not a Grassmann algebra");
    const QI& w1 = omega.covector(0);
    if (!w1.is_real() || w1.real() < 0) return false;
    for (Eigen::Index s = 1; s < a.d(); ++s)
        if (!omega.covector(s).is_zero()) return false;
    return true;
}

bool grassmann_functional_positive_gram(const FiniteStarAlgebra& a, const FiniteFunctional& omega)
{
    const Eigen::Index d = a.d();
    MatrixQI g(d, d);
    for (Eigen::Index s = 0; s < d; ++s) {
        VectorQI es = alg_star(a, basis_vector(a, static_cast<std::size_t>(s)));
        for (Eigen::Index t = 0; t < d; ++t) g(s, t) = omega(alg_mul(a, es, basis_vector(a, static_cast<std::size_t>(t))));
    }
    if (adjoint(g) != g) return false;
    return psd_certificate(g).positive;
}

SeparatingFunctional find_separating_functional(const FiniteStarAlgebra& a, const VectorQI& h)
{
    if (a.kind != FiniteStarAlgebra::Kind::Matrix) throw std::invalid_argument("find_separating_functional: matrix algebra required");
    if (!is_hermitian(a, h)) throw NotHermitian("find_separating_functional: element is not Hermitian");
    if (is_zero_matrix<QI>(h)) throw std::invalid_argument("find_separating_functional: element is zero");
    const auto n = static_cast<Eigen::Index>(a.param);
    std::vector<VectorQI> candidates;
    auto unit = [n](Eigen::Index i) {
        VectorQI v = VectorQI::Constant(n, QI(0));
        v(i) = QI(1);
        return v;
    };
    for (Eigen::Index i = 0; i < n; ++i) candidates.push_back(unit(i));
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i + 1; j < n; ++j) candidates.push_back(unit(i) + unit(j));
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i + 1; j < n; ++j) {
            VectorQI v = unit(i);
            v(j) = QI::unit();
            candidates.push_back(v);
        }
    for (const auto& v : candidates) {
        FiniteFunctional w = vector_state(a, v);
        QI value = w(h);
        if (!value.is_zero()) return {v, w, value};
    }
    throw std::logic_error("find_separating_functional: polarization search exhausted");
}

}  // namespace stardef

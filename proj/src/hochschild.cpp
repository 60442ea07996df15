#include "stardef/hochschild.hpp"

namespace stardef {

std::size_t power(std::size_t d, std::size_t n)
{
    std::size_t p = 1;
    for (std::size_t k = 0; k < n; ++k) p *= d;
    return p;
}

std::size_t tuple_index(const std::vector<std::size_t>& tuple, std::size_t d)
{
    std::size_t idx = 0;
    for (auto t : tuple) idx = idx * d + t;
    return idx;
}

std::vector<std::size_t> tuple_of(std::size_t index, std::size_t d, std::size_t n)
{
    std::vector<std::size_t> t(n);
    for (std::size_t k = n; k-- > 0;) {
        t[k] = index % d;
        index /= d;
    }
    return t;
}

// ---------------------------------------------------------------------------

Cochain Cochain::zero(const FiniteStarAlgebra& a, std::size_t n)
{
    return {n, zeros<QI>(a.d(), static_cast<Eigen::Index>(power(a.dim(), n)))};
}

Cochain Cochain::basis(const FiniteStarAlgebra& a, std::size_t n, Eigen::Index k)
{
    Cochain c = zero(a, n);
    c.values(k % a.d(), k / a.d()) = QI(1);
    return c;
}

Cochain Cochain::product(const FiniteStarAlgebra& a) { return {2, a.mu0}; }

Cochain Cochain::identity(const FiniteStarAlgebra& a) { return {1, identity_matrix<QI>(a.d())}; }

Cochain Cochain::element(const VectorQI& x) { return {0, MatrixQI(x)}; }

VectorQI Cochain::flat() const { return Eigen::Map<const VectorQI>(values.data(), values.size()); }

Cochain Cochain::from_flat(const FiniteStarAlgebra& a, std::size_t n, const VectorQI& v)
{
    Cochain c = zero(a, n);
    if (v.size() != c.size()) throw std::invalid_argument("Cochain::from_flat: size mismatch");
    c.values = Eigen::Map<const MatrixQI>(v.data(), c.values.rows(), c.values.cols());
    return c;
}

VectorQI Cochain::at(const std::vector<std::size_t>& tuple) const
{
    if (tuple.size() != arity) throw std::invalid_argument("Cochain::at: arity mismatch");
    return values.col(static_cast<Eigen::Index>(tuple_index(tuple, static_cast<std::size_t>(values.rows()))));
}

Cochain Cochain::scaled(const QI& c) const
{
    Cochain out = *this;
    for (Eigen::Index i = 0; i < out.values.size(); ++i)
        if (!out.values.data()[i].is_zero()) out.values.data()[i] *= c;
    return out;
}

Cochain operator+(const Cochain& x, const Cochain& y)
{
    if (x.arity != y.arity || x.values.rows() != y.values.rows()) throw std::invalid_argument("Cochain: arity mismatch");
    return {x.arity, x.values + y.values};
}

Cochain operator-(const Cochain& x, const Cochain& y) { return x + y.scaled(QI(-1)); }

bool operator==(const Cochain& x, const Cochain& y)
{
    return x.arity == y.arity && x.values.rows() == y.values.rows() && x.values == y.values;
}

// ---------------------------------------------------------------------------

namespace {

struct SparseColumn {
    std::size_t row;
    QI value;
};

/// Nonzero entries of each column of the involution matrix.
std::vector<std::vector<SparseColumn>> involution_columns(const FiniteStarAlgebra& a)
{
    std::vector<std::vector<SparseColumn>> cols(a.dim());
    for (Eigen::Index i = 0; i < a.d(); ++i)
        for (Eigen::Index k = 0; k < a.d(); ++k)
            if (!a.involution(k, i).is_zero())
                cols[static_cast<std::size_t>(i)].push_back({static_cast<std::size_t>(k), a.involution(k, i)});
    return cols;
}

}  // namespace

Cochain cochain_star(const FiniteStarAlgebra& a, const Cochain& phi)
{
    const std::size_t d = a.dim(), n = phi.arity;
    const auto inv = involution_columns(a);
    Cochain out = Cochain::zero(a, n);
    const std::size_t cols = power(d, n);
    // phi*(e_I) = (sum_K prod J(k_j, i_(n+1-j)) phi(e_K))*.
    for (std::size_t c = 0; c < cols; ++c) {
        const auto in = tuple_of(c, d, n);
        VectorQI acc = VectorQI::Constant(a.d(), QI(0));
        std::vector<std::size_t> k(n);
        auto rec = [&](auto&& self, std::size_t j, const QI& w) -> void {
            if (j == n) {
                const auto col = static_cast<Eigen::Index>(tuple_index(k, d));
                for (Eigen::Index r = 0; r < a.d(); ++r)
                    if (!phi.values(r, col).is_zero()) acc(r) += w * phi.values(r, col);
                return;
            }
            for (const auto& e : inv[in[n - 1 - j]]) {
                k[j] = e.row;
                self(self, j + 1, w * e.value);
            }
        };
        rec(rec, 0, QI(1));
        out.values.col(static_cast<Eigen::Index>(c)) = alg_star(a, acc);
    }
    return out;
}

bool is_hermitian(const FiniteStarAlgebra& a, const Cochain& phi) { return cochain_star(a, phi) == phi; }

bool is_antihermitian(const FiniteStarAlgebra& a, const Cochain& phi)
{
    return cochain_star(a, phi) == phi.scaled(QI(-1));
}

Cochain gerstenhaber_product(const FiniteStarAlgebra& a, const Cochain& phi, const Cochain& psi)
{
    const std::size_t n = phi.arity, m = psi.arity, d = a.dim();
    if (n + m == 0) throw std::invalid_argument("gerstenhaber_product: both cochains have arity 0");
    Cochain out = Cochain::zero(a, n + m - 1);
    if (n == 0) return out;

    // Nonzero entries of psi grouped by output basis index.
    std::vector<std::vector<SparseColumn>> psi_rows(d);
    for (Eigen::Index c = 0; c < psi.values.cols(); ++c)
        for (Eigen::Index r = 0; r < a.d(); ++r)
            if (!psi.values(r, c).is_zero())
                psi_rows[static_cast<std::size_t>(r)].push_back({static_cast<std::size_t>(c), psi.values(r, c)});

    const std::size_t dm = power(d, m);
    for (Eigen::Index c = 0; c < phi.values.cols(); ++c) {
        bool nonzero = false;
        for (Eigen::Index r = 0; r < a.d() && !nonzero; ++r) nonzero = !phi.values(r, c).is_zero();
        if (!nonzero) continue;
        const auto in = tuple_of(static_cast<std::size_t>(c), d, n);
        for (std::size_t i = 0; i < n; ++i) {
            const bool negative = (i * (m + 1)) % 2 == 1;  // (-1)^(i(m-1))
            std::size_t prefix = 0;
            for (std::size_t j = 0; j < i; ++j) prefix = prefix * d + in[j];
            std::size_t suffix = 0;
            for (std::size_t j = i + 1; j < n; ++j) suffix = suffix * d + in[j];
            const std::size_t dsuf = power(d, n - i - 1);
            for (const auto& e : psi_rows[in[i]]) {
                const auto col = static_cast<Eigen::Index>((prefix * dm + e.row) * dsuf + suffix);
                const QI w = negative ? -e.value : e.value;
                for (Eigen::Index r = 0; r < a.d(); ++r)
                    if (!phi.values(r, c).is_zero()) out.values(r, col) += w * phi.values(r, c);
            }
        }
    }
    return out;
}

Cochain gerstenhaber_bracket(const FiniteStarAlgebra& a, const Cochain& phi, const Cochain& psi)
{
    const long n = static_cast<long>(phi.arity), m = static_cast<long>(psi.arity);
    Cochain x = gerstenhaber_product(a, phi, psi);
    Cochain y = gerstenhaber_product(a, psi, phi);
    const bool odd = ((n - 1) * (m - 1)) % 2 != 0;
    return odd ? x + y : x - y;
}

Cochain hochschild_delta(const FiniteStarAlgebra& a, const Cochain& phi)
{
    Cochain b = gerstenhaber_bracket(a, Cochain::product(a), phi);
    // (-1)^(n-1): negative for even n.
    return phi.arity % 2 == 0 ? b.scaled(QI(-1)) : b;
}

HermitianParts hermitian_decompose(const FiniteStarAlgebra& a, const Cochain& phi)
{
    Cochain s = cochain_star(a, phi);
    return {(phi + s).scaled(QI(ratio(1, 2))), (phi - s).scaled(QI(Rational(0), ratio(-1, 2)))};
}

// ---------------------------------------------------------------------------

namespace {

void check_cap(const FiniteStarAlgebra& a, std::size_t n, std::size_t cap)
{
    if (power(a.dim(), n + 2) > cap)
        throw SizeCapExceeded("cochain tensors of degree " + std::to_string(n) + " over a " + std::to_string(a.dim()) +
                              "-dimensional algebra exceed the size cap " + std::to_string(cap));
}

}  // namespace

MatrixQI delta_matrix(const FiniteStarAlgebra& a, std::size_t n, std::size_t cap)
{
    check_cap(a, n, cap);
    const auto cols = static_cast<Eigen::Index>(a.dim() * power(a.dim(), n));
    const auto rows = static_cast<Eigen::Index>(a.dim() * power(a.dim(), n + 1));
    MatrixQI m = zeros<QI>(rows, cols);
    for (Eigen::Index k = 0; k < cols; ++k) m.col(k) = hochschild_delta(a, Cochain::basis(a, n, k)).flat();
    return m;
}

VectorQ realify(const VectorQI& v)
{
    VectorQ out(2 * v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        out(i) = v(i).real();
        out(i + v.size()) = v(i).imag();
    }
    return out;
}

VectorQI complexify(const VectorQ& v)
{
    const Eigen::Index n = v.size() / 2;
    VectorQI out(n);
    for (Eigen::Index i = 0; i < n; ++i) out(i) = QI(v(i), v(i + n));
    return out;
}

MatrixQ realify(const MatrixQI& m)
{
    const Eigen::Index r = m.rows(), c = m.cols();
    MatrixQ out = zeros<Rational>(2 * r, 2 * c);
    for (Eigen::Index i = 0; i < r; ++i)
        for (Eigen::Index j = 0; j < c; ++j) {
            const QI& z = m(i, j);
            if (z.is_zero()) continue;
            out(i, j) = z.real();
            out(i, j + c) = -z.imag();
            out(i + r, j) = z.imag();
            out(i + r, j + c) = z.real();
        }
    return out;
}

MatrixQ hermitian_basis(const FiniteStarAlgebra& a, std::size_t n, bool anti)
{
    const auto size = static_cast<Eigen::Index>(a.dim() * power(a.dim(), n));
    // The star is Q-linear; tabulate it on E_k and i E_k.
    MatrixQ s = zeros<Rational>(2 * size, 2 * size);
    for (Eigen::Index k = 0; k < size; ++k) {
        Cochain e = Cochain::basis(a, n, k);
        s.col(k) = realify(cochain_star(a, e).flat());
        s.col(k + size) = realify(cochain_star(a, e.scaled(QI::unit())).flat());
    }
    for (Eigen::Index k = 0; k < 2 * size; ++k) s(k, k) -= anti ? Rational(-1) : Rational(1);
    return nullspace<Rational>(s);
}

CohomologyReport cohomology_dims(const FiniteStarAlgebra& a, std::size_t n, std::size_t cap)
{
    check_cap(a, n, cap);
    CohomologyReport rep;
    rep.degree = n;
    MatrixQI dn = delta_matrix(a, n, cap);
    MatrixQI z = nullspace<QI>(dn);
    rep.dim_z = static_cast<std::size_t>(z.cols());
    MatrixQI b(dn.cols(), 0);
    if (n > 0) b = column_basis<QI>(delta_matrix(a, n - 1, cap));
    rep.dim_b = static_cast<std::size_t>(b.cols());
    rep.dim_h = rep.dim_z - rep.dim_b;
    Echelon<QI> e = row_reduce<QI>(hstack<QI>(b, z));
    for (auto p : e.pivots)
        if (p >= b.cols()) rep.representatives.push_back(Cochain::from_flat(a, n, z.col(p - b.cols())));
    return rep;
}

CohomologyReport hermitian_cohomology_dims(const FiniteStarAlgebra& a, std::size_t n, std::size_t cap)
{
    CohomologyReport rep = cohomology_dims(a, n, cap);
    rep.hermitian = true;
    MatrixQ k = hermitian_basis(a, n);
    MatrixQ dn = realify(delta_matrix(a, n, cap));
    MatrixQ y = nullspace<Rational>(multiply<Rational>(dn, k));
    MatrixQ z = multiply<Rational>(k, y);
    rep.dim_z_h = static_cast<std::size_t>(z.cols());
    MatrixQ b(k.rows(), 0);
    if (n > 0) {
        MatrixQ prev = realify(delta_matrix(a, n - 1, cap));
        MatrixQ p = hermitian_basis(a, n - 1, n % 2 == 1);
        b = column_basis<Rational>(multiply<Rational>(prev, p));
        const auto rank_im = static_cast<std::size_t>(rank<Rational>(prev));
        const auto rank_sum = static_cast<std::size_t>(rank<Rational>(hstack<Rational>(prev, k)));
        rep.dim_b_alt = rank_im + static_cast<std::size_t>(k.cols()) - rank_sum;
    }
    rep.dim_b_h = static_cast<std::size_t>(b.cols());
    rep.dim_h_h = rep.dim_z_h - rep.dim_b_h;
    Echelon<Rational> e = row_reduce<Rational>(hstack<Rational>(b, z));
    for (auto p : e.pivots)
        if (p >= b.cols()) rep.hermitian_representatives.push_back(Cochain::from_flat(a, n, complexify(VectorQ(z.col(p - b.cols())))));
    return rep;
}

}  // namespace stardef

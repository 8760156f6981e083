#include "linrep/polymat.hpp"

#include <sstream>
#include <utility>

#include "linrep/errors.hpp"

namespace linrep {

PolyMatrix PolyMatrix::identity(std::size_t n) {
    PolyMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = IntPoly::constant(1);
    return m;
}

PolyMatrix char_matrix(const IntMatrix& a) {
    const std::size_t n = a.dim();
    PolyMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) {
                m.at(i, j) = IntPoly::variable() - IntPoly::constant(a.at(i, j));
            } else {
                m.at(i, j) = IntPoly::constant(-a.at(i, j));
            }
        }
    }
    return m;
}

namespace detail {

IntPoly exact_div(const IntPoly& num, const IntPoly& den) {
    if (den.is_zero()) throw internal_error("exact_div: division by zero polynomial");
    if (num.is_zero()) return IntPoly{};
    if (num.degree() < den.degree()) {
        throw internal_error("exact_div: dividend degree below divisor degree");
    }

    std::vector<Int> rem(num.coeffs());
    const std::vector<Int>& d = den.coeffs();
    const std::size_t dd = den.degree();
    std::vector<Int> quot(num.degree() - dd + 1, Int(0));

    for (std::size_t k = quot.size(); k-- > 0;) {
        const Int& lead = rem[k + dd];
        if (lead == 0) continue;
        if (!mpz_divisible_p(lead.get_mpz_t(), d[dd].get_mpz_t())) {
            throw internal_error("exact_div: leading coefficient not divisible");
        }
        Int q;
        mpz_divexact(q.get_mpz_t(), lead.get_mpz_t(), d[dd].get_mpz_t());
        for (std::size_t t = 0; t <= dd; ++t) rem[k + t] -= q * d[t];
        quot[k] = std::move(q);
    }
    for (const Int& c : rem) {
        if (c != 0) throw internal_error("exact_div: nonzero remainder");
    }
    return IntPoly(std::move(quot));
}

}  // namespace detail

IntPoly determinant(const PolyMatrix& m) {
    const std::size_t n = m.dim();
    if (n == 0) return IntPoly::constant(1);

    PolyMatrix w = m;
    int sign = 1;
    IntPoly prev = IntPoly::constant(1);

    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w.at(k, k).is_zero()) {
            std::size_t r = k + 1;
            while (r < n && w.at(r, k).is_zero()) ++r;
            if (r == n) return IntPoly{};  // zero column below pivot
            for (std::size_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(r, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                IntPoly t = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
                w.at(i, j) = detail::exact_div(t, prev);
            }
            w.at(i, k) = IntPoly{};
        }
        prev = w.at(k, k);
    }
    IntPoly det = w.at(n - 1, n - 1);
    return sign < 0 ? -det : det;
}

PolyMatrix adjugate(const PolyMatrix& m) {
    const std::size_t n = m.dim();
    if (n == 0) return PolyMatrix{};
    PolyMatrix adj(n);
    if (n == 1) {
        adj.at(0, 0) = IntPoly::constant(1);  // determinant of the empty minor
        return adj;
    }

    PolyMatrix minor(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            // entry (i,j): row j and column i removed from m
            for (std::size_t r = 0, mr = 0; r < n; ++r) {
                if (r == j) continue;
                for (std::size_t c = 0, mc = 0; c < n; ++c) {
                    if (c == i) continue;
                    minor.at(mr, mc) = m.at(r, c);
                    ++mc;
                }
                ++mr;
            }
            IntPoly d = determinant(minor);
            adj.at(i, j) = ((i + j) % 2 == 0) ? d : -d;
        }
    }
    return adj;
}

std::vector<Int> apply_vector(const PolyMatrix& m, const std::vector<Int>& v, const Int& t) {
    const std::size_t n = m.dim();
    if (v.size() != n) {
        std::ostringstream msg;
        msg << "apply_vector: vector length " << v.size() << " does not match dimension " << n;
        throw input_error(msg.str());
    }
    std::vector<Int> y(n, Int(0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            y[i] += m.at(i, k).eval(t) * v[k];
        }
    }
    return y;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    const std::size_t n = a.dim();
    if (b.dim() != n) throw input_error("matrix product: dimension mismatch");
    PolyMatrix r(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            IntPoly acc;
            for (std::size_t k = 0; k < n; ++k) acc = acc + a.at(i, k) * b.at(k, j);
            r.at(i, j) = acc;
        }
    }
    return r;
}

}  // namespace linrep

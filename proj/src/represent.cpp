#include "linrep/represent.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "linrep/errors.hpp"
#include "linrep/polymat.hpp"

namespace linrep {

std::string to_string(RepMode mode) {
    switch (mode) {
        case RepMode::BoundDerived: return "bound-derived";
        case RepMode::Tight: return "tight";
        case RepMode::Explicit: return "explicit";
        case RepMode::UserSupplied: return "user-supplied";
    }
    throw internal_error("to_string: unknown RepMode");
}

RowPolynomials row_polynomials(const FiniteFunction& f) {
    const std::size_t n = f.size();
    if (n == 0) throw input_error("row_polynomials: degenerate n=0 input");

    const PolyMatrix chi = char_matrix(func_matrix(f));
    const PolyMatrix adj = adjugate(chi);

    RowPolynomials rp;
    rp.n = n;
    rp.char_poly = determinant(chi);
    rp.p.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        IntPoly pi;
        for (std::size_t k = 0; k < n; ++k) {
            pi = pi + adj.at(i, k).scaled(Int(k + 1));
        }
        rp.p.push_back(std::move(pi));
    }

    if (rp.char_poly.degree() != n || rp.char_poly.leading_coeff() != 1) {
        throw internal_error("row_polynomials: char_poly is not monic of degree n");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (rp.p[i].degree() != n - 1 || rp.p[i].leading_coeff() != Int(i + 1)) {
            throw internal_error("row_polynomials: p[i] degree/leading-coefficient invariant broken");
        }
    }
    return rp;
}

namespace {

Int bound_of_positive(const IntPoly& target, const char* what) {
    if (target.leading_coeff() <= 0) {
        throw internal_error(std::string("threshold: target ") + what +
                             " has non-positive leading coefficient");
    }
    return target.coeff_bound();
}

// Chain predicate 0 < y_0 < ... < y_{n-1} < m at the point x. Returns the
// first violated inequality as text, or nullopt when the chain holds.
std::optional<std::string> chain_violation_at(const RowPolynomials& rp, const Int& x) {
    std::vector<Int> y(rp.n);
    for (std::size_t i = 0; i < rp.n; ++i) y[i] = rp.p[i].eval(x);
    const Int m = rp.char_poly.eval(x);

    if (!(y[0] > 0)) {
        return "0 < y_0 fails: y_0 = " + y[0].get_str();
    }
    for (std::size_t i = 0; i + 1 < rp.n; ++i) {
        if (!(y[i] < y[i + 1])) {
            std::ostringstream msg;
            msg << "y_" << i << " < y_" << i + 1 << " fails: " << y[i].get_str()
                << " vs " << y[i + 1].get_str();
            return msg.str();
        }
    }
    if (!(y[rp.n - 1] < m)) {
        std::ostringstream msg;
        msg << "y_" << rp.n - 1 << " < m fails: " << y[rp.n - 1].get_str()
            << " vs m = " << m.get_str();
        return msg.str();
    }
    return std::nullopt;
}

LinearRepresentation evaluate_at(const RowPolynomials& rp, const Int& x, RepMode mode) {
    LinearRepresentation rep;
    rep.n = rp.n;
    rep.x = x;
    rep.m = rp.char_poly.eval(x);
    rep.mode = mode;
    rep.j.reserve(rp.n);
    for (std::size_t i = 0; i < rp.n; ++i) rep.j.push_back(rp.p[i].eval(x));
    if (rep.m <= 0) throw internal_error("construct: modulus is not positive");
    rep.a = x % rep.m;  // x and m positive, so this lands in [0, m)
    return rep;
}

LinearRepresentation degenerate_representation(RepMode mode) {
    LinearRepresentation rep;
    rep.n = 0;
    rep.x = 1;
    rep.m = 1;
    rep.a = 0;
    rep.mode = mode;
    return rep;
}

}  // namespace

Int threshold(const RowPolynomials& rp) {
    if (rp.n == 0) throw input_error("threshold: degenerate n=0 input");
    Int best = 2;
    best = std::max(best, bound_of_positive(rp.p[0], "p_0"));
    for (std::size_t i = 0; i + 1 < rp.n; ++i) {
        best = std::max(best, bound_of_positive(rp.p[i + 1] - rp.p[i], "p_{i+1} - p_i"));
    }
    if (rp.n >= 2) {
        // For n = 1, char_poly - p_0 and char_poly - x are not positivity
        // targets; construct() raises the floor to x >= 3 there instead.
        best = std::max(best, bound_of_positive(rp.char_poly - rp.p[rp.n - 1], "m - p_{n-1}"));
        best = std::max(best, bound_of_positive(rp.char_poly - IntPoly::variable(), "m - x"));
    }
    return best;
}

LinearRepresentation construct(const FiniteFunction& f, XChoice choice) {
    const RepMode mode = choice == XChoice::BoundDerived ? RepMode::BoundDerived : RepMode::Tight;
    if (f.size() == 0) return degenerate_representation(mode);

    const RowPolynomials rp = row_polynomials(f);
    const Int bound = threshold(rp);
    // n = 1 has m = x - 1, so the chain 0 < 1 < m needs x >= 3.
    const Int scan_limit = rp.n == 1 ? std::max(bound, Int(3)) : bound;

    if (choice == XChoice::BoundDerived) {
        return evaluate_at(rp, scan_limit, RepMode::BoundDerived);
    }

    for (Int x = 2; x <= scan_limit; ++x) {
        if (!chain_violation_at(rp, x)) {
            return evaluate_at(rp, x, RepMode::Tight);
        }
    }
    throw internal_error("construct: tight scan exceeded the certified threshold");
}

LinearRepresentation construct_at(const FiniteFunction& f, const Int& x) {
    if (x < 1) throw input_error("construct_at: x must be a positive integer");
    if (f.size() == 0) return degenerate_representation(RepMode::Explicit);

    const RowPolynomials rp = row_polynomials(f);
    if (auto violated = chain_violation_at(rp, x)) {
        throw chain_violation("x = " + x.get_str() + " rejected: " + *violated);
    }
    return evaluate_at(rp, x, RepMode::Explicit);
}

Certificate verify(const FiniteFunction& f, const LinearRepresentation& rep) {
    if (f.size() != rep.n) {
        throw input_error("verify: representation dimension does not match the function");
    }
    const std::size_t n = rep.n;
    Certificate cert;

    cert.injective = true;
    for (std::size_t i = 0; i < n; ++i) {
        if (rep.j[i] < 0 || rep.j[i] >= rep.m) cert.injective = false;
        for (std::size_t k = i + 1; k < n; ++k) {
            if (rep.j[i] == rep.j[k]) cert.injective = false;
        }
    }

    cert.ordered = true;
    if (n >= 1 && !(rep.j[0] > 0)) cert.ordered = false;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (!(rep.j[i] < rep.j[i + 1])) cert.ordered = false;
    }
    if (n >= 1 && !(rep.j[n - 1] < rep.m)) cert.ordered = false;

    const bool constructed = rep.mode != RepMode::UserSupplied;
    cert.congruence_ok = true;
    if (constructed) cert.identity_ok = true;
    for (std::size_t i = 0; i < n; ++i) {
        CertificateRecord rec;
        rec.index = i;
        rec.image = f.apply(i);
        rec.j_value = rep.j[i];
        rec.j_image = rep.j[rec.image];
        Int prod = rep.a * rep.j[i];
        rec.a_j_mod_m = ((prod % rep.m) + rep.m) % rep.m;
        rec.congruent =
            mpz_congruent_p(rec.j_image.get_mpz_t(), prod.get_mpz_t(), rep.m.get_mpz_t()) != 0;
        if (!rec.congruent) cert.congruence_ok = false;
        if (constructed) {
            rec.residual = rep.x * rep.j[i] - rep.m * Int(i + 1) - rec.j_image;
            if (*rec.residual != 0) cert.identity_ok = false;
        }
        cert.records.push_back(std::move(rec));
    }

    cert.passed = cert.injective && cert.congruence_ok;
    if (constructed) {
        cert.passed = cert.passed && cert.ordered && cert.identity_ok.value_or(false);
    }
    return cert;
}

}  // namespace linrep

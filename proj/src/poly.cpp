#include "linrep/poly.hpp"

#include <sstream>
#include <utility>

namespace linrep {

IntPoly::IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    normalize();
}

IntPoly IntPoly::constant(Int c) {
    IntPoly p;
    if (c != 0) p.coeffs_.push_back(std::move(c));
    return p;
}

IntPoly IntPoly::monomial(Int c, std::size_t k) {
    IntPoly p;
    if (c != 0) {
        p.coeffs_.assign(k + 1, Int(0));
        p.coeffs_[k] = std::move(c);
    }
    return p;
}

void IntPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::size_t IntPoly::degree() const noexcept {
    return coeffs_.empty() ? 0 : coeffs_.size() - 1;
}

Int IntPoly::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Int(0);
}

Int IntPoly::leading_coeff() const {
    return coeffs_.empty() ? Int(0) : coeffs_.back();
}

Int IntPoly::coeff_bound() const {
    Int bound = 0;
    for (const Int& c : coeffs_) bound += abs(c);
    return bound;
}

Int IntPoly::eval(const Int& t) const {
    Int acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= t;
        acc += *it;
    }
    return acc;
}

std::string IntPoly::to_string() const {
    std::ostringstream out;
    out << '[';
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (k > 0) out << ", ";
        out << coeffs_[k].get_str();
    }
    out << ']';
    return out.str();
}

IntPoly IntPoly::operator-() const {
    IntPoly r;
    r.coeffs_.reserve(coeffs_.size());
    for (const Int& c : coeffs_) r.coeffs_.push_back(-c);
    return r;  // negation cannot break normalization
}

IntPoly IntPoly::scaled(const Int& c) const {
    IntPoly r;
    if (c == 0) return r;
    r.coeffs_.reserve(coeffs_.size());
    for (const Int& k : coeffs_) r.coeffs_.push_back(k * c);
    return r;
}

IntPoly operator+(const IntPoly& p, const IntPoly& q) {
    IntPoly r;
    const std::size_t np = p.coeffs_.size(), nq = q.coeffs_.size();
    r.coeffs_.resize(std::max(np, nq), Int(0));
    for (std::size_t k = 0; k < np; ++k) r.coeffs_[k] += p.coeffs_[k];
    for (std::size_t k = 0; k < nq; ++k) r.coeffs_[k] += q.coeffs_[k];
    r.normalize();
    return r;
}

IntPoly operator-(const IntPoly& p, const IntPoly& q) {
    IntPoly r;
    const std::size_t np = p.coeffs_.size(), nq = q.coeffs_.size();
    r.coeffs_.resize(std::max(np, nq), Int(0));
    for (std::size_t k = 0; k < np; ++k) r.coeffs_[k] += p.coeffs_[k];
    for (std::size_t k = 0; k < nq; ++k) r.coeffs_[k] -= q.coeffs_[k];
    r.normalize();
    return r;
}

IntPoly operator*(const IntPoly& p, const IntPoly& q) {
    IntPoly r;
    if (p.is_zero() || q.is_zero()) return r;
    r.coeffs_.assign(p.coeffs_.size() + q.coeffs_.size() - 1, Int(0));
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
        if (p.coeffs_[i] == 0) continue;
        for (std::size_t k = 0; k < q.coeffs_.size(); ++k) {
            r.coeffs_[i + k] += p.coeffs_[i] * q.coeffs_[k];
        }
    }
    r.normalize();
    return r;
}

}  // namespace linrep

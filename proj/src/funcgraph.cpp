#include "linrep/funcgraph.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "linrep/errors.hpp"

namespace linrep {

namespace {

void check_closure(const std::vector<std::size_t>& images) {
    const std::size_t n = images.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (images[i] >= n) {
            std::ostringstream msg;
            msg << "image " << images[i] << " at index " << i
                << " is outside the domain {0,...," << n - 1 << "}";
            throw input_error(msg.str());
        }
    }
}

}  // namespace

FiniteFunction::FiniteFunction(std::vector<std::size_t> images) : images_(std::move(images)) {
    check_closure(images_);
}

FiniteFunction FiniteFunction::parse(std::string_view text) {
    std::vector<std::size_t> images;
    std::string token;
    auto flush = [&] {
        if (token.empty()) return;
        for (char ch : token) {
            if (!std::isdigit(static_cast<unsigned char>(ch))) {
                throw input_error("cannot parse token '" + token + "' as a non-negative integer");
            }
        }
        unsigned long value = 0;
        try {
            value = std::stoul(token);
        } catch (const std::out_of_range&) {
            throw input_error("image value '" + token + "' is out of range");
        }
        images.push_back(static_cast<std::size_t>(value));
        token.clear();
    };
    for (char ch : text) {
        if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
            flush();
        } else {
            token.push_back(ch);
        }
    }
    flush();
    return FiniteFunction(std::move(images));
}

std::size_t FiniteFunction::apply(std::size_t i) const {
    if (i >= images_.size()) throw std::out_of_range("FiniteFunction: index out of range");
    return images_[i];
}

std::string FiniteFunction::render() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (i > 0) out << ',';
        out << images_[i];
    }
    return out.str();
}

IntMatrix func_matrix(const FiniteFunction& f) {
    const std::size_t n = f.size();
    IntMatrix a(n);
    for (std::size_t i = 0; i < n; ++i) a.at(i, f.apply(i)) = 1;
    return a;
}

std::size_t enumeration_cap() {
    if (const char* env = std::getenv("LINREP_ENUM_CAP")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && end != env) return static_cast<std::size_t>(v);
    }
    return 6;
}

FunctionEnumerator::FunctionEnumerator(std::size_t n) : n_(n), odometer_(n, 0) {
    const std::size_t cap = enumeration_cap();
    if (n > cap) {
        Int count;
        mpz_ui_pow_ui(count.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(n));
        std::ostringstream msg;
        msg << "enumeration of n=" << n << " refused: it would generate " << count.get_str()
            << " functions (cap is " << cap << ", override with LINREP_ENUM_CAP)";
        throw input_error(msg.str());
    }
}

std::optional<FiniteFunction> FunctionEnumerator::next() {
    if (exhausted_) return std::nullopt;
    FiniteFunction current{std::vector<std::size_t>(odometer_)};
    // advance: rightmost position is least significant for lexicographic order
    exhausted_ = true;
    for (std::size_t k = n_; k-- > 0;) {
        if (odometer_[k] + 1 < n_) {
            ++odometer_[k];
            for (std::size_t t = k + 1; t < n_; ++t) odometer_[t] = 0;
            exhausted_ = false;
            break;
        }
    }
    return current;
}

}  // namespace linrep

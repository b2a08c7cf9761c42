#include "ostar/star_spec.hpp"

#include <utility>

#include "ostar/error.hpp"

namespace ostar {

namespace {

BigInt self_power(int x) { return ipow(BigInt(x), static_cast<unsigned>(x)); }

}  // namespace

StarSpec::StarSpec(int out_leaves, int in_leaves) {
    if (out_leaves < 0 || in_leaves < 0) {
        throw Error(ErrorKind::DomainError, "star degrees must be non-negative");
    }
    if (out_leaves == 0 || in_leaves == 0) {
        throw Error(ErrorKind::EllZero,
                    "S_{" + std::to_string(out_leaves) + "," + std::to_string(in_leaves) +
                        "} is a directed star; stars with kl = 0 are not handled");
    }
    reversed_ = out_leaves < in_leaves;
    k_ = reversed_ ? in_leaves : out_leaves;
    l_ = reversed_ ? out_leaves : in_leaves;

    const int m = k_ + l_;
    lambda0_ = make_rational(self_power(k_) * self_power(l_), self_power(m));
    lambda1_ = make_rational(self_power(k_) * l_ * self_power(l_ - 1), self_power(m - 1));
    leaf_coefficient_ = make_rational(self_power(k_ - 1) * self_power(l_), self_power(m - 1));
    automorphisms_ = factorial(static_cast<unsigned>(k_)) * factorial(static_cast<unsigned>(l_));
    prefactor_ = factorial(static_cast<unsigned>(m + 1)) / automorphisms_;
}

std::string StarSpec::name() const {
    return "S_{" + std::to_string(out_leaves()) + "," + std::to_string(in_leaves()) + "}";
}

}  // namespace ostar

#pragma once

#include <compare>
#include <type_traits>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>

#include "qdeform/scalar/rational.hpp"
#include "qdeform/scalar/surd.hpp"

namespace qd::suq2 {

// alpha^a gamma^b gamma*^c, or alpha*^a gamma^b gamma*^c when `dagger`;
// a == 0 always uses the alpha family.
struct Monomial {
    bool dagger = false;
    int a = 0, b = 0, c = 0;

    int degree() const { return a + b + c; }
    // Doubled bidegree: left multiplication by the torus sees k, right sees l.
    int k2() const { return dagger ? a + b - c : -a + b - c; }
    int l2() const { return dagger ? a - b + c : -a - b + c; }
    std::string str() const;

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

Monomial make_monomial(bool dagger, int a, int b, int c);
inline const Monomial unit_monomial{};

template <class K>
using Element = std::map<Monomial, K>;
template <class K>
using Tensor = std::map<std::pair<Monomial, Monomial>, K>;

template <class K>
void add_term(Element<K>& x, const Monomial& m, const std::type_identity_t<K>& v) {
    if (is_zero(v)) return;
    auto [it, fresh] = x.try_emplace(m, v);
    if (!fresh) {
        it->second = it->second + v;
        if (is_zero(it->second)) x.erase(it);
    }
}

template <class K>
Element<K> combine(const Element<K>& x, const K& a, const Element<K>& y, const K& b) {
    Element<K> out;
    for (const auto& [m, v] : x) add_term(out, m, a * v);
    for (const auto& [m, v] : y) add_term(out, m, b * v);
    return out;
}

template <class K, class From>
Element<K> convert(const Element<From>& x) {
    Element<K> out;
    for (const auto& [m, v] : x) out.emplace(m, K(v));
    return out;
}

std::string element_str(const Element<Rational>& x);
std::string element_str(const Element<Surd>& x);

// O(SU_q(2)) at a fixed rational q in [-1, 1] \ {0}, with cached monomial
// products, stars and coproducts.  Copies share the caches.
class Ring {
  public:
    explicit Ring(Rational q);

    const Rational& q() const { return q_; }

    const Element<Rational>& product(const Monomial& x, const Monomial& y) const;
    const Element<Rational>& star(const Monomial& x) const;
    const Tensor<Rational>& coproduct(const Monomial& x) const;

    // Letters a, A, g, G for alpha, alpha*, gamma, gamma*.
    Element<Rational> word(std::string_view letters) const;
    Element<Rational> generator(char letter) const;

    template <class K>
    Element<K> mul(const Element<K>& x, const Element<K>& y) const {
        Element<K> out;
        for (const auto& [mx, vx] : x)
            for (const auto& [my, vy] : y) {
                const K v = vx * vy;
                for (const auto& [m, c] : product(mx, my)) add_term(out, m, v * K(c));
            }
        return out;
    }

    template <class K>
    Element<K> adjoint(const Element<K>& x) const {
        Element<K> out;
        for (const auto& [m, v] : x)
            for (const auto& [s, c] : star(m)) add_term(out, s, conj(v) * K(c));
        return out;
    }

    template <class K>
    Tensor<K> delta(const Element<K>& x) const {
        Tensor<K> out;
        for (const auto& [m, v] : x)
            for (const auto& [p, c] : coproduct(m)) {
                auto [it, fresh] = out.try_emplace(p, v * K(c));
                if (!fresh) it->second = it->second + v * K(c);
            }
        std::erase_if(out, [](const auto& e) { return is_zero(e.second); });
        return out;
    }

  private:
    struct Cache;
    Rational q_;
    std::shared_ptr<Cache> cache_;
};

}  // namespace qd::suq2

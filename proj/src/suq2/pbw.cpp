#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "qdeform/suq2/pbw.hpp"

namespace qd::suq2 {

namespace {

std::uint64_t pack(const Monomial& m) {
    return (static_cast<std::uint64_t>(m.dagger) << 60) | (static_cast<std::uint64_t>(m.a) << 40) |
           (static_cast<std::uint64_t>(m.b) << 20) | static_cast<std::uint64_t>(m.c);
}

struct PairHash {
    std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& p) const {
        return std::hash<std::uint64_t>()(p.first * 0x9E3779B97F4A7C15ULL ^ p.second);
    }
};

std::string letters_of(const Monomial& m) {
    std::string w(m.a, m.dagger ? 'A' : 'a');
    w.append(m.b, 'g');
    w.append(m.c, 'G');
    return w;
}

template <class K>
std::string render(const Element<K>& x, auto&& coef) {
    if (x.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, v] : x) {
        if (!first) out << " + ";
        first = false;
        out << "(" << coef(v) << ")";
        if (m != unit_monomial) out << "*" << m.str();
    }
    return out.str();
}

}  // namespace

Monomial make_monomial(bool dagger, int a, int b, int c) {
    if (a < 0 || b < 0 || c < 0) throw std::invalid_argument("negative PBW exponent");
    return {a > 0 && dagger, a, b, c};
}

std::string Monomial::str() const {
    if (degree() == 0) return "1";
    std::string out;
    auto part = [&out](const char* name, int e) {
        if (e == 0) return;
        if (!out.empty()) out += "*";
        out += name;
        if (e > 1) out += "^" + std::to_string(e);
    };
    part(dagger ? "alpha*" : "alpha", a);
    part("gamma", b);
    part("gamma*", c);
    return out;
}

std::string element_str(const Element<Rational>& x) {
    return render(x, [](const Rational& v) { return to_string(v); });
}

std::string element_str(const Element<Surd>& x) {
    return render(x, [](const Surd& v) { return v.str(); });
}

struct Ring::Cache {
    std::mutex lock;
    std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, Element<Rational>, PairHash> products;
    std::unordered_map<std::uint64_t, Element<Rational>> stars;
    std::unordered_map<std::uint64_t, Tensor<Rational>> coproducts;
};

Ring::Ring(Rational q) : q_(std::move(q)), cache_(std::make_shared<Cache>()) {
    if (sgn(q_) == 0 || abs(q_) > 1) throw std::invalid_argument("q must lie in [-1, 1] \\ {0}");
}

namespace {

// m * generator in normal form
Element<Rational> times_generator(const Rational& q, const Monomial& m, char g) {
    Element<Rational> out;
    const int shift = m.b + m.c;
    switch (g) {
        case 'g':
            add_term(out, make_monomial(m.dagger, m.a, m.b + 1, m.c), Rational(1));
            break;
        case 'G':
            add_term(out, make_monomial(m.dagger, m.a, m.b, m.c + 1), Rational(1));
            break;
        case 'a': {
            // gamma alpha = q^-1 alpha gamma, alpha* alpha = 1 - gamma* gamma
            const Rational f = pow(q, -shift);
            if (!m.dagger) {
                add_term(out, make_monomial(false, m.a + 1, m.b, m.c), f);
            } else {
                add_term(out, make_monomial(true, m.a - 1, m.b, m.c), f);
                add_term(out, make_monomial(true, m.a - 1, m.b + 1, m.c + 1), Rational(-f));
            }
            break;
        }
        case 'A': {
            // gamma alpha* = q alpha* gamma, alpha alpha* = 1 - q^2 gamma gamma*
            const Rational f = pow(q, shift);
            if (m.dagger || m.a == 0) {
                add_term(out, make_monomial(true, m.a + 1, m.b, m.c), f);
            } else {
                add_term(out, make_monomial(false, m.a - 1, m.b, m.c), f);
                add_term(out, make_monomial(false, m.a - 1, m.b + 1, m.c + 1), Rational(-f * q * q));
            }
            break;
        }
        default:
            throw std::invalid_argument(std::string("unknown generator '") + g + "'");
    }
    return out;
}

Element<Rational> times_word(const Rational& q, Element<Rational> x, const std::string& letters) {
    for (char g : letters) {
        Element<Rational> next;
        for (const auto& [m, v] : x)
            for (const auto& [p, c] : times_generator(q, m, g)) add_term(next, p, Rational(v * c));
        x = std::move(next);
    }
    return x;
}

Tensor<Rational> tensor_mul(const Ring& r, const Tensor<Rational>& x, const Tensor<Rational>& y) {
    Tensor<Rational> out;
    for (const auto& [px, vx] : x)
        for (const auto& [py, vy] : y) {
            const Rational v = vx * vy;
            const auto& left = r.product(px.first, py.first);
            const auto& right = r.product(px.second, py.second);
            for (const auto& [ml, cl] : left)
                for (const auto& [mr, cr] : right) {
                    auto [it, fresh] = out.try_emplace({ml, mr}, v * cl * cr);
                    if (!fresh) it->second += v * cl * cr;
                }
        }
    std::erase_if(out, [](const auto& e) { return sgn(e.second) == 0; });
    return out;
}

Monomial generator_monomial(char g) {
    switch (g) {
        case 'a': return make_monomial(false, 1, 0, 0);
        case 'A': return make_monomial(true, 1, 0, 0);
        case 'g': return make_monomial(false, 0, 1, 0);
        case 'G': return make_monomial(false, 0, 0, 1);
        default: throw std::invalid_argument(std::string("unknown generator '") + g + "'");
    }
}

}  // namespace

const Element<Rational>& Ring::product(const Monomial& x, const Monomial& y) const {
    const auto key = std::make_pair(pack(x), pack(y));
    {
        std::lock_guard<std::mutex> g(cache_->lock);
        auto it = cache_->products.find(key);
        if (it != cache_->products.end()) return it->second;
    }
    Element<Rational> value = times_word(q_, Element<Rational>{{x, Rational(1)}}, letters_of(y));
    std::lock_guard<std::mutex> g(cache_->lock);
    return cache_->products.try_emplace(key, std::move(value)).first->second;
}

const Element<Rational>& Ring::star(const Monomial& x) const {
    const auto key = pack(x);
    {
        std::lock_guard<std::mutex> g(cache_->lock);
        auto it = cache_->stars.find(key);
        if (it != cache_->stars.end()) return it->second;
    }
    std::string w = letters_of(x);
    std::string reversed;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        const char c = *it;
        reversed += c == 'a' ? 'A' : c == 'A' ? 'a' : c == 'g' ? 'G' : 'g';
    }
    Element<Rational> value = times_word(q_, Element<Rational>{{unit_monomial, Rational(1)}}, reversed);
    std::lock_guard<std::mutex> g(cache_->lock);
    return cache_->stars.try_emplace(key, std::move(value)).first->second;
}

const Tensor<Rational>& Ring::coproduct(const Monomial& x) const {
    const auto key = pack(x);
    {
        std::lock_guard<std::mutex> g(cache_->lock);
        auto it = cache_->coproducts.find(key);
        if (it != cache_->coproducts.end()) return it->second;
    }
    Tensor<Rational> value;
    if (x.degree() == 0) {
        value[{unit_monomial, unit_monomial}] = 1;
    } else if (x.degree() == 1) {
        const Monomial a = generator_monomial('a'), A = generator_monomial('A');
        const Monomial g = generator_monomial('g'), G = generator_monomial('G');
        if (x == a) value = {{{a, a}, 1}, {{G, g}, -q_}};
        if (x == A) value = {{{A, A}, 1}, {{g, G}, -q_}};
        if (x == g) value = {{{g, a}, 1}, {{A, g}, 1}};
        if (x == G) value = {{{G, A}, 1}, {{a, G}, 1}};
    } else {
        // peel the last letter of the normal-form word
        std::string w = letters_of(x);
        const char last = w.back();
        w.pop_back();
        Monomial rest = x;
        if (last == 'G') --rest.c;
        else if (last == 'g') --rest.b;
        else rest = make_monomial(x.dagger, x.a - 1, 0, 0);
        value = tensor_mul(*this, coproduct(rest), coproduct(generator_monomial(last)));
    }
    std::lock_guard<std::mutex> g(cache_->lock);
    return cache_->coproducts.try_emplace(key, std::move(value)).first->second;
}

Element<Rational> Ring::word(std::string_view letters) const {
    return times_word(q_, Element<Rational>{{unit_monomial, Rational(1)}}, std::string(letters));
}

Element<Rational> Ring::generator(char letter) const { return {{generator_monomial(letter), Rational(1)}}; }

}  // namespace qd::suq2

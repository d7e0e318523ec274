#include "darboux/monomial.hpp"

#include <algorithm>
#include <unordered_set>

#include "darboux/error.hpp"

namespace darboux {

VarContext::VarContext(std::vector<std::string> names) : names_(std::move(names)) {
    std::unordered_set<std::string> seen;
    for (const auto& n : names_) {
        if (n.empty()) throw ContextError("empty variable name");
        if (!seen.insert(n).second) throw ContextError("duplicate variable name '" + n + "'");
    }
}

std::size_t VarContext::find(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return npos;
}

std::size_t VarContext::index_of(std::string_view name) const {
    const auto i = find(name);
    if (i == npos) throw ContextError("unknown variable '" + std::string(name) + "'");
    return i;
}

bool same_context(const ContextPtr& a, const ContextPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

void require_same_context(const ContextPtr& a, const ContextPtr& b) {
    if (!same_context(a, b)) throw ContextError("operands belong to different variable contexts");
}

long Degree::value() const {
    if (neg_inf_) throw PreconditionError("degree of the zero polynomial is -infinity");
    return v_;
}

std::string Degree::to_string() const { return neg_inf_ ? "-inf" : std::to_string(v_); }

namespace {

Monomial::Exponent checked(unsigned long v) {
    if (v > Monomial::kMaxExponent) throw ArithmeticError("exponent " + std::to_string(v) + " exceeds the 16-bit cap");
    return static_cast<Monomial::Exponent>(v);
}

}  // namespace

Monomial::Monomial(std::initializer_list<unsigned long> exps) {
    e_.reserve(exps.size());
    for (auto v : exps) e_.push_back(checked(v));
}

Monomial::Monomial(std::span<const unsigned long> exps) {
    e_.reserve(exps.size());
    for (auto v : exps) e_.push_back(checked(v));
}

Monomial Monomial::unit(std::size_t arity, std::size_t var, unsigned long power) {
    Monomial m(arity);
    m.set(var, power);
    return m;
}

unsigned long Monomial::degree() const {
    unsigned long d = 0;
    for (auto v : e_) d += v;
    return d;
}

bool Monomial::is_one() const {
    return std::all_of(e_.begin(), e_.end(), [](Exponent v) { return v == 0; });
}

void Monomial::set(std::size_t i, unsigned long v) { e_.at(i) = checked(v); }

Monomial Monomial::operator*(const Monomial& o) const {
    if (o.arity() != arity()) throw ContextError("monomial arity mismatch");
    Monomial r(arity());
    for (std::size_t i = 0; i < e_.size(); ++i)
        r.e_[i] = checked(static_cast<unsigned long>(e_[i]) + o.e_[i]);
    return r;
}

bool Monomial::divisible_by(const Monomial& o) const {
    if (o.arity() != arity()) throw ContextError("monomial arity mismatch");
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] < o.e_[i]) return false;
    return true;
}

Monomial Monomial::operator/(const Monomial& o) const {
    if (!divisible_by(o)) throw ArithmeticError("monomial is not divisible");
    Monomial r(arity());
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = static_cast<Exponent>(e_[i] - o.e_[i]);
    return r;
}

Monomial Monomial::pow(unsigned long k) const {
    Monomial r(arity());
    for (std::size_t i = 0; i < e_.size(); ++i) {
        const unsigned long v = e_[i];
        if (v != 0 && k > kMaxExponent / v) throw ArithmeticError("exponent overflow in monomial power");
        r.e_[i] = checked(v * k);
    }
    return r;
}

bool grevlex_greater(const Monomial& a, const Monomial& b) {
    const auto da = a.degree();
    const auto db = b.degree();
    if (da != db) return da > db;
    for (std::size_t i = a.arity(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

namespace {

void enumerate(std::size_t var, unsigned long remaining, std::vector<unsigned long>& cur,
               std::vector<Monomial>& out) {
    if (var + 1 == cur.size()) {
        cur[var] = remaining;
        out.emplace_back(std::span<const unsigned long>(cur));
        return;
    }
    for (unsigned long e = 0; e <= remaining; ++e) {
        cur[var] = e;
        enumerate(var + 1, remaining - e, cur, out);
    }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t arity, unsigned long degree) {
    std::vector<Monomial> out;
    if (arity == 0) {
        if (degree == 0) out.emplace_back(0);
        return out;
    }
    std::vector<unsigned long> cur(arity, 0);
    enumerate(0, degree, cur, out);
    std::sort(out.begin(), out.end(), grevlex_greater);
    return out;
}

std::string format_monomial(const Monomial& m, const VarContext& ctx) {
    std::string out;
    for (std::size_t i = 0; i < m.arity(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += ctx.name(i);
        if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

}  // namespace darboux

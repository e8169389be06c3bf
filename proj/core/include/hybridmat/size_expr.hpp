#pragma once

#include <initializer_list>
#include <map>
#include <string>
#include <string_view>

#include "hybridmat/errors.hpp"

namespace hybridmat {

// Bindings of size parameters to concrete integers. Any integer is legal,
// including values that turn intervals backwards.
class ParamEnv {
public:
    ParamEnv() = default;
    ParamEnv(std::initializer_list<std::pair<const std::string, long long>> init) : bindings_(init) {}

    void bind(const std::string& name, long long value) { bindings_[name] = value; }

    long long lookup(const std::string& name) const {
        auto it = bindings_.find(name);
        if (it == bindings_.end()) throw UnboundParameter(name);
        return it->second;
    }

    bool contains(const std::string& name) const { return bindings_.count(name) != 0; }
    const std::map<std::string, long long>& bindings() const { return bindings_; }

private:
    std::map<std::string, long long> bindings_;
};

// Affine integer expression over named size parameters, e.g. 2*q + n - 1.
// Kept in canonical form (no zero coefficients), so structural equality
// coincides with semantic equality. Parameter products are unrepresentable.
class SizeExpr {
public:
    SizeExpr() : constant_(0) {}
    SizeExpr(long long c) : constant_(c) {}

    static SizeExpr param(const std::string& name, long long coeff = 1) {
        SizeExpr e;
        if (coeff != 0) e.coeffs_[name] = coeff;
        return e;
    }

    // Text syntax: integer coefficients, + and -, * only between an integer
    // literal and a parameter name.
    static SizeExpr parse(std::string_view text);

    long long constant() const { return constant_; }
    const std::map<std::string, long long>& coefficients() const { return coeffs_; }
    bool is_constant() const { return coeffs_.empty(); }
    bool is_zero() const { return constant_ == 0 && coeffs_.empty(); }

    long long eval(const ParamEnv& env) const {
        long long v = constant_;
        for (const auto& [name, coeff] : coeffs_) v += coeff * env.lookup(name);
        return v;
    }

    SizeExpr operator+(const SizeExpr& o) const {
        SizeExpr r = *this;
        r.constant_ += o.constant_;
        for (const auto& [name, coeff] : o.coeffs_) r.add_coeff(name, coeff);
        return r;
    }
    SizeExpr operator-(const SizeExpr& o) const { return *this + (-o); }
    SizeExpr operator-() const {
        SizeExpr r;
        r.constant_ = -constant_;
        for (const auto& [name, coeff] : coeffs_) r.coeffs_[name] = -coeff;
        return r;
    }
    SizeExpr operator*(long long k) const {
        SizeExpr r;
        if (k == 0) return r;
        r.constant_ = constant_ * k;
        for (const auto& [name, coeff] : coeffs_) r.coeffs_[name] = coeff * k;
        return r;
    }

    bool operator==(const SizeExpr&) const = default;

    std::string str() const;

private:
    void add_coeff(const std::string& name, long long delta) {
        auto it = coeffs_.find(name);
        if (it == coeffs_.end()) {
            if (delta != 0) coeffs_[name] = delta;
        } else if ((it->second += delta) == 0) {
            coeffs_.erase(it);
        }
    }

    long long constant_;
    std::map<std::string, long long> coeffs_;
};

inline SizeExpr operator*(long long k, const SizeExpr& e) { return e * k; }

} // namespace hybridmat

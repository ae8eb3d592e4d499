#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "linham/gaussian.hpp"

namespace linham {

// Shared, ordered list of parameter symbols (f, g, lam, ...).  Fixed per
// computation context; operations require both operands to share it.
using ParamContext = std::shared_ptr<const std::vector<std::string>>;

inline ParamContext make_param_context(std::vector<std::string> symbols) {
    return std::make_shared<const std::vector<std::string>>(std::move(symbols));
}

// Multivariate polynomial in the context's symbols over Q(i); sparse map from
// exponent vector to coefficient, no stored zeros.
class ParamPoly {
public:
    ParamPoly() = default;
    explicit ParamPoly(ParamContext ctx) : ctx_(std::move(ctx)) {}
    ParamPoly(ParamContext ctx, GaussianRational c) : ctx_(std::move(ctx)) {
        if (!c.is_zero()) terms_[std::vector<int>(ctx_->size(), 0)] = std::move(c);
    }

    static ParamPoly constant(const ParamContext& ctx, GaussianRational c) { return ParamPoly(ctx, std::move(c)); }
    static ParamPoly symbol(const ParamContext& ctx, const std::string& name);

    const ParamContext& context() const { return ctx_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        if (terms_.empty()) return true;
        if (terms_.size() > 1) return false;
        for (int e : terms_.begin()->first)
            if (e != 0) return false;
        return true;
    }
    GaussianRational constant_term() const {
        if (terms_.empty()) return GaussianRational::zero();
        auto it = terms_.find(std::vector<int>(ctx_ ? ctx_->size() : 0, 0));
        return it == terms_.end() ? GaussianRational::zero() : it->second;
    }

    ParamPoly operator-() const;
    friend ParamPoly operator+(const ParamPoly& a, const ParamPoly& b);
    friend ParamPoly operator-(const ParamPoly& a, const ParamPoly& b);
    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
    ParamPoly operator*(const GaussianRational& s) const;
    ParamPoly& operator+=(const ParamPoly& o) { return *this = *this + o; }
    ParamPoly& operator-=(const ParamPoly& o) { return *this = *this - o; }
    ParamPoly& operator*=(const ParamPoly& o) { return *this = *this * o; }
    friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const ParamPoly& a, const ParamPoly& b) { return !(a == b); }

    std::string str() const;

private:
    void insert(const std::vector<int>& exp, const GaussianRational& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(exp, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    static void check_ctx(const ParamPoly& a, const ParamPoly& b);

    ParamContext ctx_;
    std::map<std::vector<int>, GaussianRational> terms_;
};

} // namespace linham

#include "linham/parampoly.hpp"

#include <algorithm>
#include <sstream>

#include "linham/error.hpp"

namespace linham {

ParamPoly ParamPoly::symbol(const ParamContext& ctx, const std::string& name) {
    auto it = std::find(ctx->begin(), ctx->end(), name);
    if (it == ctx->end()) raise(ErrorKind::InvalidArgument, "unknown parameter symbol " + name);
    ParamPoly p(ctx);
    std::vector<int> exp(ctx->size(), 0);
    exp[static_cast<size_t>(it - ctx->begin())] = 1;
    p.terms_[exp] = GaussianRational::one();
    return p;
}

void ParamPoly::check_ctx(const ParamPoly& a, const ParamPoly& b) {
    if (a.ctx_ && b.ctx_ && a.ctx_ != b.ctx_ && *a.ctx_ != *b.ctx_)
        raise(ErrorKind::InvalidArgument, "mixed parameter contexts");
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

ParamPoly operator+(const ParamPoly& a, const ParamPoly& b) {
    ParamPoly::check_ctx(a, b);
    ParamPoly r = a;
    if (!r.ctx_) r.ctx_ = b.ctx_;
    for (const auto& [e, c] : b.terms_) r.insert(e, c);
    return r;
}

ParamPoly operator-(const ParamPoly& a, const ParamPoly& b) {
    ParamPoly::check_ctx(a, b);
    ParamPoly r = a;
    if (!r.ctx_) r.ctx_ = b.ctx_;
    for (const auto& [e, c] : b.terms_) r.insert(e, -c);
    return r;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
    ParamPoly::check_ctx(a, b);
    ParamPoly r(a.ctx_ ? a.ctx_ : b.ctx_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            std::vector<int> e(ea.size());
            for (size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
            r.insert(e, ca * cb);
        }
    return r;
}

ParamPoly ParamPoly::operator*(const GaussianRational& s) const {
    ParamPoly r(ctx_);
    if (s.is_zero()) return r;
    r.terms_ = terms_;
    for (auto& [e, c] : r.terms_) c *= s;
    return r;
}

std::string ParamPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        bool has_symbols = std::any_of(e.begin(), e.end(), [](int x) { return x != 0; });
        if (!has_symbols || !c.is_one()) {
            bool wrap = !c.is_real() || c.re() < 0;
            os << (wrap ? "(" + c.str() + ")" : c.str());
            if (has_symbols) os << "*";
        }
        bool first_sym = true;
        for (size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            if (!first_sym) os << "*";
            first_sym = false;
            os << (*ctx_)[k];
            if (e[k] > 1) os << "^" << e[k];
        }
    }
    return os.str();
}

} // namespace linham

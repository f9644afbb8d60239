#include "flr/operators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "flr/errors.hpp"

namespace flr {

namespace {

void check_yager_p(double p, bool analysis_only) {
    if (!(p > 0.0)) throw std::invalid_argument("Yager exponent must be positive, got " + std::to_string(p));
    if (p < 1.0 && !analysis_only) {
        throw std::invalid_argument("Yager exponent < 1 violates the t-norm axioms; pass analysis_only to study it anyway");
    }
}

double cap(double g) { return std::clamp(g, -kGradCap, kGradCap); }

double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

// Index of the smallest / largest element, lowest index on ties.
std::size_t argmin(std::span<const double> xs) {
    return static_cast<std::size_t>(std::min_element(xs.begin(), xs.end()) - xs.begin());
}
std::size_t argmax(std::span<const double> xs) {
    return static_cast<std::size_t>(std::max_element(xs.begin(), xs.end()) - xs.begin());
}

// Two smallest values of xs (n >= 1; for n == 1 the second is 1, the
// conjunction-neutral element, matching the recursive fold).
std::pair<double, double> two_smallest(std::span<const double> xs) {
    double lo = 1.0, lo2 = 1.0;
    for (double x : xs) {
        if (x < lo) {
            lo2 = lo;
            lo = x;
        } else if (x < lo2) {
            lo2 = x;
        }
    }
    return {lo, lo2};
}

std::pair<double, double> two_largest(std::span<const double> xs) {
    double hi = 0.0, hi2 = 0.0;
    for (double x : xs) {
        if (x > hi) {
            hi2 = hi;
            hi = x;
        } else if (x > hi2) {
            hi2 = x;
        }
    }
    return {hi, hi2};
}

}  // namespace

TNormKind TNormKind::yager(double p, bool analysis_only) {
    check_yager_p(p, analysis_only);
    TNormKind k = make(Tag::Yager);
    k.p = p;
    k.analysis_only = analysis_only;
    return k;
}

TConormKind TConormKind::yager(double p, bool analysis_only) {
    check_yager_p(p, analysis_only);
    TConormKind k = make(Tag::Yager);
    k.p = p;
    k.analysis_only = analysis_only;
    return k;
}

TConormKind dual(const TNormKind& t) {
    switch (t.tag) {
        case TNormKind::Tag::Godel: return TConormKind::godel();
        case TNormKind::Tag::Product: return TConormKind::product();
        case TNormKind::Tag::Lukasiewicz: return TConormKind::lukasiewicz();
        case TNormKind::Tag::Drastic: return TConormKind::drastic();
        case TNormKind::Tag::NilpotentMin: return TConormKind::nilpotent_max();
        case TNormKind::Tag::Yager: return TConormKind::yager(t.p, t.analysis_only);
    }
    throw std::logic_error("bad t-norm tag");
}

TNormKind dual(const TConormKind& s) {
    switch (s.tag) {
        case TConormKind::Tag::Godel: return TNormKind::godel();
        case TConormKind::Tag::Product: return TNormKind::product();
        case TConormKind::Tag::Lukasiewicz: return TNormKind::lukasiewicz();
        case TConormKind::Tag::Drastic: return TNormKind::drastic();
        case TConormKind::Tag::NilpotentMax: return TNormKind::nilpotent_min();
        case TConormKind::Tag::Yager: return TNormKind::yager(s.p, s.analysis_only);
    }
    throw std::logic_error("bad t-conorm tag");
}

ImplicationKind ImplicationKind::yager_s(double p, bool analysis_only) {
    check_yager_p(p, analysis_only);
    ImplicationKind k = make(Tag::YagerS);
    k.p = p;
    return k;
}

ImplicationKind ImplicationKind::yager_r(double p, bool analysis_only) {
    check_yager_p(p, analysis_only);
    ImplicationKind k = make(Tag::YagerR);
    k.p = p;
    return k;
}

ImplicationKind ImplicationKind::sigmoidal(ImplicationKind base, double s, double b0) {
    if (!(s > 0.0)) throw std::invalid_argument("sigmoidal spread s must be positive");
    ImplicationKind k = make(Tag::Sigmoidal);
    k.inner = std::make_shared<ImplicationKind>(std::move(base));
    k.s = s;
    k.b0 = b0;
    // Affine constants pinning sigma_I(0)=0 and sigma_I(1)=1.
    const double e_hi = std::exp(-s * (1.0 + b0));  // at I = 1
    const double e_lo = std::exp(-s * b0);          // at I = 0
    k.sig_d = (1.0 + e_hi) / (e_lo - e_hi);
    k.sig_h = 1.0 + e_lo;
    return k;
}

AggregatorKind AggregatorKind::yager_a(double p) {
    if (!(p > 0.0)) throw std::invalid_argument("Yager aggregator exponent must be positive");
    return make(Tag::YagerA, p);
}

AggregatorKind AggregatorKind::yager_e(double p) {
    if (!(p > 0.0)) throw std::invalid_argument("Yager aggregator exponent must be positive");
    return make(Tag::YagerE, p);
}

AggregatorKind AggregatorKind::gme(double p) {
    if (!(p > 0.0)) throw std::invalid_argument("GME exponent must be positive");
    return make(Tag::GME, p);
}

AggregatorKind AggregatorKind::gm(double p) {
    if (!(p > 0.0)) throw std::invalid_argument("GM exponent must be positive");
    return make(Tag::GM, p);
}

bool AggregatorKind::is_universal() const {
    switch (tag) {
        case Tag::Min:
        case Tag::Product:
        case Tag::LogProduct:
        case Tag::LukasiewiczA:
        case Tag::YagerA:
        case Tag::NilpotentA:
        case Tag::GME:
        case Tag::RMSE:
        case Tag::MAE:
            return true;
        case Tag::Max:
        case Tag::LukasiewiczE:
        case Tag::YagerE:
        case Tag::NilpotentE:
        case Tag::GM:
        case Tag::ProbSum:
            return false;
    }
    throw std::logic_error("bad aggregator tag");
}

std::string to_string(const TNormKind& k) {
    switch (k.tag) {
        case TNormKind::Tag::Godel: return "godel";
        case TNormKind::Tag::Product: return "product";
        case TNormKind::Tag::Lukasiewicz: return "lukasiewicz";
        case TNormKind::Tag::Drastic: return "drastic";
        case TNormKind::Tag::NilpotentMin: return "nilpotent_min";
        case TNormKind::Tag::Yager: return "yager:" + std::to_string(k.p);
    }
    return "?";
}

std::string to_string(const TConormKind& k) {
    switch (k.tag) {
        case TConormKind::Tag::Godel: return "godel";
        case TConormKind::Tag::Product: return "product";
        case TConormKind::Tag::Lukasiewicz: return "lukasiewicz";
        case TConormKind::Tag::Drastic: return "drastic";
        case TConormKind::Tag::NilpotentMax: return "nilpotent_max";
        case TConormKind::Tag::Yager: return "yager:" + std::to_string(k.p);
    }
    return "?";
}

std::string to_string(const ImplicationKind& k) {
    switch (k.tag) {
        case ImplicationKind::Tag::KleeneDienes: return "kleene_dienes";
        case ImplicationKind::Tag::Reichenbach: return "reichenbach";
        case ImplicationKind::Tag::Lukasiewicz: return "lukasiewicz";
        case ImplicationKind::Tag::DuboisPrade: return "dubois_prade";
        case ImplicationKind::Tag::Fodor: return "fodor";
        case ImplicationKind::Tag::GodelR: return "godel_r";
        case ImplicationKind::Tag::Goguen: return "goguen";
        case ImplicationKind::Tag::WeberR: return "weber_r";
        case ImplicationKind::Tag::YagerS: return "yager_s:" + std::to_string(k.p);
        case ImplicationKind::Tag::YagerR: return "yager_r:" + std::to_string(k.p);
        case ImplicationKind::Tag::Sigmoidal:
            return "sigmoidal(" + to_string(*k.inner) + ",s=" + std::to_string(k.s) + ")";
    }
    return "?";
}

std::string to_string(const AggregatorKind& k) {
    switch (k.tag) {
        case AggregatorKind::Tag::Min: return "min";
        case AggregatorKind::Tag::Max: return "max";
        case AggregatorKind::Tag::Product: return "product";
        case AggregatorKind::Tag::LogProduct: return "log_product";
        case AggregatorKind::Tag::LukasiewiczA: return "lukasiewicz_a";
        case AggregatorKind::Tag::LukasiewiczE: return "lukasiewicz_e";
        case AggregatorKind::Tag::YagerA: return "yager_a:" + std::to_string(k.p);
        case AggregatorKind::Tag::YagerE: return "yager_e:" + std::to_string(k.p);
        case AggregatorKind::Tag::NilpotentA: return "nilpotent_a";
        case AggregatorKind::Tag::NilpotentE: return "nilpotent_e";
        case AggregatorKind::Tag::GME: return "gme:" + std::to_string(k.p);
        case AggregatorKind::Tag::GM: return "gm:" + std::to_string(k.p);
        case AggregatorKind::Tag::RMSE: return "rmse";
        case AggregatorKind::Tag::MAE: return "mae";
        case AggregatorKind::Tag::ProbSum: return "prob_sum";
    }
    return "?";
}

AggregatorKind aggregator_by_name(const std::string& name) {
    std::string base = name;
    double p = 2.0;
    bool has_p = false;
    if (auto pos = name.find(':'); pos != std::string::npos) {
        base = name.substr(0, pos);
        try {
            p = std::stod(name.substr(pos + 1));
        } catch (const std::exception&) {
            throw ParseError("bad aggregator parameter in '" + name + "'");
        }
        has_p = true;
    }
    if (base == "min") return AggregatorKind::min();
    if (base == "max") return AggregatorKind::max();
    if (base == "product") return AggregatorKind::product();
    if (base == "log_product") return AggregatorKind::log_product();
    if (base == "lukasiewicz_a") return AggregatorKind::lukasiewicz_a();
    if (base == "lukasiewicz_e") return AggregatorKind::lukasiewicz_e();
    if (base == "yager_a") return AggregatorKind::yager_a(p);
    if (base == "yager_e") return AggregatorKind::yager_e(p);
    if (base == "nilpotent_a") return AggregatorKind::nilpotent_a();
    if (base == "nilpotent_e") return AggregatorKind::nilpotent_e();
    if (base == "gme") return AggregatorKind::gme(has_p ? p : 2.0);
    if (base == "gm") return AggregatorKind::gm(has_p ? p : 2.0);
    if (base == "rmse") return AggregatorKind::rmse();
    if (base == "mae") return AggregatorKind::mae();
    if (base == "prob_sum") return AggregatorKind::prob_sum();
    throw ParseError("unknown aggregator '" + name + "'");
}

// ---------------------------------------------------------------------------
// Values
// ---------------------------------------------------------------------------

double t_norm(const TNormKind& kind, UnitValue av, UnitValue bv) {
    const double a = av, b = bv;
    // Neutrality T(1, a) = a holds exactly for every t-norm.
    if (a == 1.0) return b;
    if (b == 1.0) return a;
    switch (kind.tag) {
        case TNormKind::Tag::Godel: return std::min(a, b);
        case TNormKind::Tag::Product: return a * b;
        case TNormKind::Tag::Lukasiewicz: return std::max(a + b - 1.0, 0.0);
        case TNormKind::Tag::Drastic: return (a == 1.0 || b == 1.0) ? std::min(a, b) : 0.0;
        case TNormKind::Tag::NilpotentMin: return (a + b <= 1.0) ? 0.0 : std::min(a, b);
        case TNormKind::Tag::Yager: {
            const double s = std::pow(1.0 - a, kind.p) + std::pow(1.0 - b, kind.p);
            return std::max(1.0 - std::pow(s, 1.0 / kind.p), 0.0);
        }
    }
    throw std::logic_error("bad t-norm tag");
}

double t_conorm(const TConormKind& kind, UnitValue av, UnitValue bv) {
    const double a = av, b = bv;
    // Neutrality S(0, a) = a holds exactly for every t-conorm.
    if (a == 0.0) return b;
    if (b == 0.0) return a;
    switch (kind.tag) {
        case TConormKind::Tag::Godel: return std::max(a, b);
        case TConormKind::Tag::Product: return a + b - a * b;
        case TConormKind::Tag::Lukasiewicz: return std::min(a + b, 1.0);
        case TConormKind::Tag::Drastic: return (a == 0.0 || b == 0.0) ? std::max(a, b) : 1.0;
        case TConormKind::Tag::NilpotentMax: return (a + b >= 1.0) ? 1.0 : std::max(a, b);
        case TConormKind::Tag::Yager: {
            const double s = std::pow(a, kind.p) + std::pow(b, kind.p);
            return std::min(std::pow(s, 1.0 / kind.p), 1.0);
        }
    }
    throw std::logic_error("bad t-conorm tag");
}

double implication(const ImplicationKind& kind, UnitValue av, UnitValue cv) {
    const double a = av, c = cv;
    switch (kind.tag) {
        case ImplicationKind::Tag::KleeneDienes: return std::max(1.0 - a, c);
        case ImplicationKind::Tag::Reichenbach: return 1.0 - a + a * c;
        case ImplicationKind::Tag::Lukasiewicz: return std::min(1.0 - a + c, 1.0);
        case ImplicationKind::Tag::DuboisPrade:
            if (a == 1.0) return c;
            if (c == 0.0) return 1.0 - a;
            return 1.0;
        case ImplicationKind::Tag::Fodor: return (a <= c) ? 1.0 : std::max(1.0 - a, c);
        case ImplicationKind::Tag::GodelR: return (a <= c) ? 1.0 : c;
        case ImplicationKind::Tag::Goguen:
            if (a <= c) return 1.0;
            if (a <= kDivEps) return std::min(c / kDivEps, 1.0);
            return c / a;
        case ImplicationKind::Tag::WeberR: return (a < 1.0) ? 1.0 : c;
        case ImplicationKind::Tag::YagerS: {
            const double s = std::pow(1.0 - a, kind.p) + std::pow(c, kind.p);
            return std::min(std::pow(s, 1.0 / kind.p), 1.0);
        }
        case ImplicationKind::Tag::YagerR: {
            if (a <= c) return 1.0;
            const double u = std::pow(1.0 - c, kind.p) - std::pow(1.0 - a, kind.p);
            return 1.0 - std::pow(u, 1.0 / kind.p);
        }
        case ImplicationKind::Tag::Sigmoidal: {
            const double base = implication(*kind.inner, av, cv);
            const double sig = sigmoid(kind.s * (base + kind.b0));
            return std::clamp(kind.sig_d * (kind.sig_h * sig - 1.0), 0.0, 1.0);
        }
    }
    throw std::logic_error("bad implication tag");
}

double aggregate(const AggregatorKind& kind, std::span<const double> xs) {
    const std::size_t n = xs.size();
    if (n == 0) {
        if (kind.tag == AggregatorKind::Tag::LogProduct) return 0.0;  // log of the empty product
        return kind.is_universal() ? 1.0 : 0.0;
    }
    switch (kind.tag) {
        case AggregatorKind::Tag::Min: return *std::min_element(xs.begin(), xs.end());
        case AggregatorKind::Tag::Max: return *std::max_element(xs.begin(), xs.end());
        case AggregatorKind::Tag::Product: {
            double p = 1.0;
            for (double x : xs) p *= x;
            return p;
        }
        case AggregatorKind::Tag::LogProduct: {
            double s = 0.0;
            for (double x : xs) {
                if (x == 0.0) return -std::numeric_limits<double>::infinity();
                s += std::log(x);
            }
            return s;
        }
        case AggregatorKind::Tag::LukasiewiczA: {
            const double s = std::accumulate(xs.begin(), xs.end(), 0.0);
            return std::max(s - (static_cast<double>(n) - 1.0), 0.0);
        }
        case AggregatorKind::Tag::LukasiewiczE: {
            const double s = std::accumulate(xs.begin(), xs.end(), 0.0);
            return std::min(s, 1.0);
        }
        case AggregatorKind::Tag::YagerA: {
            double s = 0.0;
            for (double x : xs) s += std::pow(1.0 - x, kind.p);
            return std::max(1.0 - std::pow(s, 1.0 / kind.p), 0.0);
        }
        case AggregatorKind::Tag::YagerE: {
            double s = 0.0;
            for (double x : xs) s += std::pow(x, kind.p);
            return std::min(std::pow(s, 1.0 / kind.p), 1.0);
        }
        case AggregatorKind::Tag::NilpotentA: {
            auto [lo, lo2] = two_smallest(xs);
            return (lo + lo2 > 1.0) ? lo : 0.0;
        }
        case AggregatorKind::Tag::NilpotentE: {
            auto [hi, hi2] = two_largest(xs);
            return (hi + hi2 < 1.0) ? hi : 1.0;
        }
        case AggregatorKind::Tag::GME:
        case AggregatorKind::Tag::RMSE:
        case AggregatorKind::Tag::MAE: {
            const double p = (kind.tag == AggregatorKind::Tag::GME) ? kind.p
                             : (kind.tag == AggregatorKind::Tag::RMSE) ? 2.0
                                                                       : 1.0;
            double s = 0.0;
            for (double x : xs) s += std::pow(1.0 - x, p);
            return 1.0 - std::pow(s / static_cast<double>(n), 1.0 / p);
        }
        case AggregatorKind::Tag::GM: {
            double s = 0.0;
            for (double x : xs) s += std::pow(x, kind.p);
            return std::pow(s / static_cast<double>(n), 1.0 / kind.p);
        }
        case AggregatorKind::Tag::ProbSum: {
            double q = 1.0;
            for (double x : xs) q *= 1.0 - x;
            return 1.0 - q;
        }
    }
    throw std::logic_error("bad aggregator tag");
}

double t_norm_fold(const TNormKind& kind, std::span<const double> xs) {
    double v = 1.0;
    for (std::size_t i = 0; i < xs.size(); ++i) v = (i == 0) ? xs[i] : t_norm(kind, v, xs[i]);
    return v;
}

double t_conorm_fold(const TConormKind& kind, std::span<const double> xs) {
    double v = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) v = (i == 0) ? xs[i] : t_conorm(kind, v, xs[i]);
    return v;
}

// ---------------------------------------------------------------------------
// Gradients
// ---------------------------------------------------------------------------

PairGrad t_norm_grad(const TNormKind& kind, double a, double b) {
    switch (kind.tag) {
        case TNormKind::Tag::Godel:
            if (a < b) return {1.0, 0.0, false};
            if (a > b) return {0.0, 1.0, false};
            return {1.0, 0.0, true};  // tie -> lowest index
        case TNormKind::Tag::Product:
            return {b, a, false};
        case TNormKind::Tag::Lukasiewicz: {
            const double s = a + b;
            if (s > 1.0) return {1.0, 1.0, false};
            if (s < 1.0) return {0.0, 0.0, false};
            return {1.0, 1.0, true};  // boundary -> non-vanishing branch
        }
        case TNormKind::Tag::Drastic: {
            if (a == 1.0 && b == 1.0) return {1.0, 0.0, true};
            if (b == 1.0) return {1.0, 0.0, true};
            if (a == 1.0) return {0.0, 1.0, true};
            return {0.0, 0.0, false};
        }
        case TNormKind::Tag::NilpotentMin: {
            const double s = a + b;
            if (s < 1.0) return {0.0, 0.0, false};
            if (s == 1.0) return {0.0, 0.0, true};
            if (a < b) return {1.0, 0.0, false};
            if (a > b) return {0.0, 1.0, false};
            return {1.0, 0.0, true};
        }
        case TNormKind::Tag::Yager: {
            const double ua = 1.0 - a, ub = 1.0 - b;
            const double s = std::pow(ua, kind.p) + std::pow(ub, kind.p);
            if (s > 1.0) return {0.0, 0.0, false};
            if (s == 0.0) return {0.0, 0.0, true};  // undefined corner a = b = 1
            const bool boundary = (s == 1.0);
            const double common = std::pow(s, 1.0 / kind.p - 1.0);
            PairGrad g{cap(common * std::pow(ua, kind.p - 1.0)), cap(common * std::pow(ub, kind.p - 1.0)), boundary};
            if (boundary) g.da = g.db = 0.0;  // value branch at the kink
            return g;
        }
    }
    throw std::logic_error("bad t-norm tag");
}

PairGrad t_conorm_grad(const TConormKind& kind, double a, double b) {
    switch (kind.tag) {
        case TConormKind::Tag::Godel:
            if (a > b) return {1.0, 0.0, false};
            if (a < b) return {0.0, 1.0, false};
            return {1.0, 0.0, true};
        case TConormKind::Tag::Product:
            return {1.0 - b, 1.0 - a, false};
        case TConormKind::Tag::Lukasiewicz: {
            const double s = a + b;
            if (s < 1.0) return {1.0, 1.0, false};
            if (s > 1.0) return {0.0, 0.0, false};
            return {1.0, 1.0, true};
        }
        case TConormKind::Tag::Drastic: {
            if (a == 0.0 && b == 0.0) return {1.0, 0.0, true};
            if (b == 0.0) return {1.0, 0.0, true};
            if (a == 0.0) return {0.0, 1.0, true};
            return {0.0, 0.0, false};
        }
        case TConormKind::Tag::NilpotentMax: {
            const double s = a + b;
            if (s > 1.0) return {0.0, 0.0, false};
            if (s == 1.0) return {0.0, 0.0, true};
            if (a > b) return {1.0, 0.0, false};
            if (a < b) return {0.0, 1.0, false};
            return {1.0, 0.0, true};
        }
        case TConormKind::Tag::Yager: {
            const double s = std::pow(a, kind.p) + std::pow(b, kind.p);
            if (s > 1.0) return {0.0, 0.0, false};
            if (s == 0.0) return {0.0, 0.0, true};  // undefined corner a = b = 0
            const bool boundary = (s == 1.0);
            const double common = std::pow(s, 1.0 / kind.p - 1.0);
            PairGrad g{cap(common * std::pow(a, kind.p - 1.0)), cap(common * std::pow(b, kind.p - 1.0)), boundary};
            if (boundary) g.da = g.db = 0.0;
            return g;
        }
    }
    throw std::logic_error("bad t-conorm tag");
}

PairGrad implication_grad(const ImplicationKind& kind, double a, double c) {
    switch (kind.tag) {
        case ImplicationKind::Tag::KleeneDienes: {
            const double na = 1.0 - a;
            if (na < c) return {0.0, 1.0, false};
            if (na > c) return {-1.0, 0.0, false};
            return {-1.0, 0.0, true};  // tie -> first operand (the negated antecedent)
        }
        case ImplicationKind::Tag::Reichenbach:
            return {c - 1.0, a, false};
        case ImplicationKind::Tag::Lukasiewicz: {
            // min(1-a+c, 1) == S_L(1-a, c); chain through the t-conorm.
            PairGrad s = t_conorm_grad(TConormKind::lukasiewicz(), 1.0 - a, c);
            return {-s.da, s.db, s.flagged};
        }
        case ImplicationKind::Tag::DuboisPrade: {
            if (a == 1.0 && c == 0.0) return {-1.0, 0.0, true};
            if (a == 1.0) return {0.0, 1.0, true};
            if (c == 0.0) return {-1.0, 0.0, true};
            return {0.0, 0.0, false};
        }
        case ImplicationKind::Tag::Fodor: {
            if (a < c) return {0.0, 0.0, false};
            if (a == c) return {0.0, 0.0, true};
            const double na = 1.0 - a;
            if (na < c) return {0.0, 1.0, false};
            if (na > c) return {-1.0, 0.0, false};
            return {-1.0, 0.0, true};
        }
        case ImplicationKind::Tag::GodelR: {
            if (a < c) return {0.0, 0.0, false};
            if (a == c) return {0.0, 0.0, true};
            return {0.0, 1.0, false};
        }
        case ImplicationKind::Tag::Goguen: {
            if (a < c) return {0.0, 0.0, false};
            if (a == c) return {0.0, 0.0, true};
            if (a <= kDivEps) return {cap(-c / (kDivEps * kDivEps)), cap(1.0 / kDivEps), true};
            return {cap(-c / (a * a)), cap(1.0 / a), false};
        }
        case ImplicationKind::Tag::WeberR: {
            if (a < 1.0) return {0.0, 0.0, false};
            return {0.0, 1.0, true};  // discontinuous in a at a = 1
        }
        case ImplicationKind::Tag::YagerS: {
            const double na = 1.0 - a;
            const double s = std::pow(na, kind.p) + std::pow(c, kind.p);
            if (s > 1.0) return {0.0, 0.0, false};
            if (s == 0.0) return {0.0, 0.0, true};  // corner a = 1, c = 0
            const bool boundary = (s == 1.0);
            const double common = std::pow(s, 1.0 / kind.p - 1.0);
            PairGrad g{cap(-common * std::pow(na, kind.p - 1.0)), cap(common * std::pow(c, kind.p - 1.0)), boundary};
            if (boundary) g.da = g.db = 0.0;
            return g;
        }
        case ImplicationKind::Tag::YagerR: {
            if (a < c) return {0.0, 0.0, false};
            if (a == c) return {0.0, 0.0, true};  // singular edge as a approaches c
            const double u = std::pow(1.0 - c, kind.p) - std::pow(1.0 - a, kind.p);
            if (u <= 0.0) return {0.0, 0.0, true};
            const double common = std::pow(u, 1.0 / kind.p - 1.0);
            return {cap(-common * std::pow(1.0 - a, kind.p - 1.0)), cap(common * std::pow(1.0 - c, kind.p - 1.0)), false};
        }
        case ImplicationKind::Tag::Sigmoidal: {
            const double base = implication(*kind.inner, a, c);
            const double sig = sigmoid(kind.s * (base + kind.b0));
            const double douter = kind.sig_d * kind.sig_h * kind.s * sig * (1.0 - sig);
            PairGrad g = implication_grad(*kind.inner, a, c);
            return {douter * g.da, douter * g.db, g.flagged};
        }
    }
    throw std::logic_error("bad implication tag");
}

VecGrad aggregate_grad(const AggregatorKind& kind, std::span<const double> xs) {
    const std::size_t n = xs.size();
    VecGrad out;
    out.dx.assign(n, 0.0);
    if (n == 0) return out;
    const double nd = static_cast<double>(n);

    switch (kind.tag) {
        case AggregatorKind::Tag::Min: {
            const std::size_t i = argmin(xs);
            out.dx[i] = 1.0;
            out.flagged = std::count(xs.begin(), xs.end(), xs[i]) > 1;
            return out;
        }
        case AggregatorKind::Tag::Max: {
            const std::size_t i = argmax(xs);
            out.dx[i] = 1.0;
            out.flagged = std::count(xs.begin(), xs.end(), xs[i]) > 1;
            return out;
        }
        case AggregatorKind::Tag::Product: {
            // Prefix/suffix products avoid dividing by zero entries.
            std::vector<double> suffix(n + 1, 1.0);
            for (std::size_t i = n; i-- > 0;) suffix[i] = suffix[i + 1] * xs[i];
            double prefix = 1.0;
            for (std::size_t i = 0; i < n; ++i) {
                out.dx[i] = prefix * suffix[i + 1];
                prefix *= xs[i];
            }
            return out;
        }
        case AggregatorKind::Tag::LogProduct: {
            for (std::size_t i = 0; i < n; ++i) {
                if (xs[i] < kLogEps) out.flagged = true;
                out.dx[i] = 1.0 / std::max(xs[i], kLogEps);
            }
            return out;
        }
        case AggregatorKind::Tag::LukasiewiczA: {
            const double s = std::accumulate(xs.begin(), xs.end(), 0.0);
            const double thr = nd - 1.0;
            if (s < thr) return out;
            std::fill(out.dx.begin(), out.dx.end(), 1.0);
            out.flagged = (s == thr);
            return out;
        }
        case AggregatorKind::Tag::LukasiewiczE: {
            const double s = std::accumulate(xs.begin(), xs.end(), 0.0);
            if (s > 1.0) return out;
            std::fill(out.dx.begin(), out.dx.end(), 1.0);
            out.flagged = (s == 1.0);
            return out;
        }
        case AggregatorKind::Tag::YagerA: {
            double s = 0.0;
            for (double x : xs) s += std::pow(1.0 - x, kind.p);
            if (s > 1.0) return out;
            if (s == 0.0) {
                out.flagged = true;  // all-ones corner
                return out;
            }
            out.flagged = (s == 1.0);
            if (out.flagged) return out;
            const double common = std::pow(s, 1.0 / kind.p - 1.0);
            for (std::size_t i = 0; i < n; ++i) out.dx[i] = cap(common * std::pow(1.0 - xs[i], kind.p - 1.0));
            return out;
        }
        case AggregatorKind::Tag::YagerE: {
            double s = 0.0;
            for (double x : xs) s += std::pow(x, kind.p);
            if (s > 1.0) return out;
            if (s == 0.0) {
                out.flagged = true;
                return out;
            }
            out.flagged = (s == 1.0);
            if (out.flagged) return out;
            const double common = std::pow(s, 1.0 / kind.p - 1.0);
            for (std::size_t i = 0; i < n; ++i) out.dx[i] = cap(common * std::pow(xs[i], kind.p - 1.0));
            return out;
        }
        case AggregatorKind::Tag::NilpotentA: {
            auto [lo, lo2] = two_smallest(xs);
            if (lo + lo2 < 1.0) return out;
            if (lo + lo2 == 1.0) {
                out.flagged = true;
                return out;
            }
            const std::size_t i = argmin(xs);
            out.dx[i] = 1.0;
            out.flagged = std::count(xs.begin(), xs.end(), lo) > 1;
            return out;
        }
        case AggregatorKind::Tag::NilpotentE: {
            auto [hi, hi2] = two_largest(xs);
            if (hi + hi2 > 1.0) return out;
            if (hi + hi2 == 1.0) {
                out.flagged = true;
                return out;
            }
            const std::size_t i = argmax(xs);
            out.dx[i] = 1.0;
            out.flagged = std::count(xs.begin(), xs.end(), hi) > 1;
            return out;
        }
        case AggregatorKind::Tag::GME:
        case AggregatorKind::Tag::RMSE:
        case AggregatorKind::Tag::MAE: {
            const double p = (kind.tag == AggregatorKind::Tag::GME) ? kind.p
                             : (kind.tag == AggregatorKind::Tag::RMSE) ? 2.0
                                                                       : 1.0;
            if (p == 1.0) {
                std::fill(out.dx.begin(), out.dx.end(), 1.0 / nd);
                return out;
            }
            double s = 0.0;
            for (double x : xs) s += std::pow(1.0 - x, p);
            if (s == 0.0) {
                // Zero-error corner; diagonal limit convention.
                std::fill(out.dx.begin(), out.dx.end(), 1.0 / nd);
                out.flagged = true;
                return out;
            }
            const double common = std::pow(1.0 / nd, 1.0 / p) * std::pow(s, 1.0 / p - 1.0);
            for (std::size_t i = 0; i < n; ++i) out.dx[i] = cap(common * std::pow(1.0 - xs[i], p - 1.0));
            return out;
        }
        case AggregatorKind::Tag::GM: {
            if (kind.p == 1.0) {
                std::fill(out.dx.begin(), out.dx.end(), 1.0 / nd);
                return out;
            }
            double s = 0.0;
            for (double x : xs) s += std::pow(x, kind.p);
            if (s == 0.0) {
                std::fill(out.dx.begin(), out.dx.end(), 1.0 / nd);
                out.flagged = true;
                return out;
            }
            const double common = std::pow(s / nd, 1.0 / kind.p - 1.0) / nd;
            for (std::size_t i = 0; i < n; ++i) out.dx[i] = cap(common * std::pow(xs[i], kind.p - 1.0));
            return out;
        }
        case AggregatorKind::Tag::ProbSum: {
            std::vector<double> suffix(n + 1, 1.0);
            for (std::size_t i = n; i-- > 0;) suffix[i] = suffix[i + 1] * (1.0 - xs[i]);
            double prefix = 1.0;
            for (std::size_t i = 0; i < n; ++i) {
                out.dx[i] = prefix * suffix[i + 1];
                prefix *= 1.0 - xs[i];
            }
            return out;
        }
    }
    throw std::logic_error("bad aggregator tag");
}

}  // namespace flr

#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "flr/unit.hpp"

namespace flr {

// ---------------------------------------------------------------------------
// Operator families
// ---------------------------------------------------------------------------

struct TNormKind {
    enum class Tag { Godel, Product, Lukasiewicz, Drastic, NilpotentMin, Yager };

    Tag tag = Tag::Godel;
    double p = 2.0;              // Yager exponent
    bool analysis_only = false;  // permit 0 < p < 1 (violates t-norm axioms)

    static TNormKind godel() { return make(Tag::Godel); }
    static TNormKind product() { return make(Tag::Product); }
    static TNormKind lukasiewicz() { return make(Tag::Lukasiewicz); }
    static TNormKind drastic() { return make(Tag::Drastic); }
    static TNormKind nilpotent_min() { return make(Tag::NilpotentMin); }
    static TNormKind yager(double p, bool analysis_only = false);

    static TNormKind make(Tag t) {
        TNormKind k;
        k.tag = t;
        return k;
    }
};

struct TConormKind {
    enum class Tag { Godel, Product, Lukasiewicz, Drastic, NilpotentMax, Yager };

    Tag tag = Tag::Godel;
    double p = 2.0;
    bool analysis_only = false;

    static TConormKind godel() { return make(Tag::Godel); }
    static TConormKind product() { return make(Tag::Product); }
    static TConormKind lukasiewicz() { return make(Tag::Lukasiewicz); }
    static TConormKind drastic() { return make(Tag::Drastic); }
    static TConormKind nilpotent_max() { return make(Tag::NilpotentMax); }
    static TConormKind yager(double p, bool analysis_only = false);

    static TConormKind make(Tag t) {
        TConormKind k;
        k.tag = t;
        return k;
    }
};

/// The strong-negation dual of a t-norm, and back.
TConormKind dual(const TNormKind& t);
TNormKind dual(const TConormKind& s);

struct ImplicationKind {
    enum class Tag {
        KleeneDienes,
        Reichenbach,
        Lukasiewicz,
        DuboisPrade,
        Fodor,
        GodelR,
        Goguen,
        WeberR,
        YagerS,
        YagerR,
        Sigmoidal,
    };

    Tag tag = Tag::Reichenbach;
    double p = 2.0;  // Yager exponent

    // Sigmoidal transform around a base implication. d and h are the affine
    // constants fixed by the boundary conditions; computed once here.
    std::shared_ptr<const ImplicationKind> inner;
    double s = 1.0;
    double b0 = -0.5;
    double sig_d = 0.0;
    double sig_h = 0.0;

    static ImplicationKind kleene_dienes() { return make(Tag::KleeneDienes); }
    static ImplicationKind reichenbach() { return make(Tag::Reichenbach); }
    static ImplicationKind lukasiewicz() { return make(Tag::Lukasiewicz); }
    static ImplicationKind dubois_prade() { return make(Tag::DuboisPrade); }
    static ImplicationKind fodor() { return make(Tag::Fodor); }
    static ImplicationKind godel_r() { return make(Tag::GodelR); }
    static ImplicationKind goguen() { return make(Tag::Goguen); }
    static ImplicationKind weber_r() { return make(Tag::WeberR); }
    static ImplicationKind yager_s(double p, bool analysis_only = false);
    static ImplicationKind yager_r(double p, bool analysis_only = false);
    static ImplicationKind sigmoidal(ImplicationKind base, double s, double b0 = -0.5);

    static ImplicationKind make(Tag t) {
        ImplicationKind k;
        k.tag = t;
        return k;
    }
};

struct AggregatorKind {
    enum class Tag {
        Min,
        Max,
        Product,
        LogProduct,
        LukasiewiczA,
        LukasiewiczE,
        YagerA,
        YagerE,
        NilpotentA,
        NilpotentE,
        GME,
        GM,
        RMSE,  // alias of GME(2)
        MAE,   // alias of GME(1)
        ProbSum,
    };

    Tag tag = Tag::Min;
    double p = 2.0;

    static AggregatorKind min() { return make(Tag::Min); }
    static AggregatorKind max() { return make(Tag::Max); }
    static AggregatorKind product() { return make(Tag::Product); }
    static AggregatorKind log_product() { return make(Tag::LogProduct); }
    static AggregatorKind lukasiewicz_a() { return make(Tag::LukasiewiczA); }
    static AggregatorKind lukasiewicz_e() { return make(Tag::LukasiewiczE); }
    static AggregatorKind yager_a(double p);
    static AggregatorKind yager_e(double p);
    static AggregatorKind nilpotent_a() { return make(Tag::NilpotentA); }
    static AggregatorKind nilpotent_e() { return make(Tag::NilpotentE); }
    static AggregatorKind gme(double p);
    static AggregatorKind gm(double p);
    static AggregatorKind rmse() { return make(Tag::RMSE, 2.0); }
    static AggregatorKind mae() { return make(Tag::MAE, 1.0); }
    static AggregatorKind prob_sum() { return make(Tag::ProbSum); }

    static AggregatorKind make(Tag t, double p = 2.0) {
        AggregatorKind k;
        k.tag = t;
        k.p = p;
        return k;
    }

    /// Universal aggregators extend a conjunction; existential ones a
    /// disjunction. Determines the neutral value of an empty aggregation.
    bool is_universal() const;
};

std::string to_string(const TNormKind& k);
std::string to_string(const TConormKind& k);
std::string to_string(const ImplicationKind& k);
std::string to_string(const AggregatorKind& k);

/// Parse an aggregator spec such as "lukasiewicz_a", "yager_a:2", "gme:1.5".
AggregatorKind aggregator_by_name(const std::string& name);

// ---------------------------------------------------------------------------
// Values
// ---------------------------------------------------------------------------

inline double negate(UnitValue a) { return 1.0 - a.value(); }

double t_norm(const TNormKind& kind, UnitValue a, UnitValue b);
double t_conorm(const TConormKind& kind, UnitValue a, UnitValue b);
double implication(const ImplicationKind& kind, UnitValue a, UnitValue c);

/// Variadic aggregation. Empty input returns the neutral element (1 for
/// universal kinds, 0 for existential ones). LogProduct maps onto (-inf, 0].
double aggregate(const AggregatorKind& kind, std::span<const double> xs);

/// Left fold of a binary t-norm / t-conorm over xs (n-ary conjunction or
/// disjunction). Empty folds return the neutral element.
double t_norm_fold(const TNormKind& kind, std::span<const double> xs);
double t_conorm_fold(const TConormKind& kind, std::span<const double> xs);

// ---------------------------------------------------------------------------
// Analytical partial derivatives
// ---------------------------------------------------------------------------

/// `flagged` marks evaluations on a non-differentiability locus or at a
/// singular corner, where the returned value follows a fixed convention:
/// ties of min/max go to the lowest index, the Lukasiewicz boundary takes
/// the non-vanishing branch, undefined Yager corners return 0, and Goguen
/// magnitudes are capped at 1/kDivEps.
struct PairGrad {
    double da = 0.0;
    double db = 0.0;
    bool flagged = false;
};

struct VecGrad {
    std::vector<double> dx;
    bool flagged = false;
};

inline constexpr double kDivEps = 1e-12;   // Goguen antecedent guard
inline constexpr double kLogEps = 1e-30;   // LogProduct gradient guard
inline constexpr double kGradCap = 1e12;   // cap for singular magnitudes

PairGrad t_norm_grad(const TNormKind& kind, double a, double b);
PairGrad t_conorm_grad(const TConormKind& kind, double a, double b);

/// Partials (dI/da, dI/dc); da is typically non-positive.
PairGrad implication_grad(const ImplicationKind& kind, double a, double c);

VecGrad aggregate_grad(const AggregatorKind& kind, std::span<const double> xs);

}  // namespace flr

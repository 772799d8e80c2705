#pragma once

// Statistical engine for the banner analysis: design matrices over
// categorical/indicator/interaction terms, maximum-likelihood logistic
// regression via IRLS, AIC model comparison, odds ratios, McFadden
// pseudo-R², likelihood-ratio p-values, Spearman correlation, grouped
// medians and detector-accuracy metrics.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "noticescope/detail/linalg.hpp"
#include "noticescope/detail/special_functions.hpp"
#include "noticescope/detail/strings.hpp"
#include "noticescope/records.hpp"

namespace noticescope::inference {

class StatError : public std::runtime_error {
  public:
    enum class Code {
        EmptyData,
        UnknownBaseline,
        UnknownTerm,
        RankDeficient,
        SeparationDetected,
        DegenerateNull,
        ConstantInput,
        UndefinedRate,
        BadFormula,
        EmptyCells,
    };

    StatError(Code code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Code code() const { return code_; }

  private:
    Code code_;
};

struct ObservationRow {
    int banner_exists = 0;  // 0/1 response
    std::string tld;        // category
    std::string vpn;        // category (vantage label)
    int vpn_eu = 0;         // 0/1
    std::optional<double> height;
    std::optional<double> words;
    std::optional<double> links;
};

inline ObservationRow to_row(const noticemetrics::BannerObservation& o) {
    ObservationRow r;
    r.banner_exists = o.banner_exists ? 1 : 0;
    r.tld = o.tld;
    r.vpn = o.vantage_label;
    r.vpn_eu = o.vpn_eu ? 1 : 0;
    if (o.height_px) r.height = *o.height_px;
    if (o.word_count) r.words = *o.word_count;
    if (o.link_count) r.links = *o.link_count;
    return r;
}

// --- model specification -------------------------------------------------

// One 0/1 column per non-baseline level of a categorical variable
// ("TLD" or "VPN"). An empty baseline resolves to the smallest observed
// level at design time.
struct CategoricalTerm {
    std::string variable;
    std::string baseline;
};

// Named 0/1 column: "VPN_EU", or "TLD_<level>" / "VPN_<label>" level
// indicators.
struct IndicatorTerm {
    std::string name;
};

// Elementwise product of two indicator columns.
struct InteractionTerm {
    IndicatorTerm a;
    IndicatorTerm b;
};

using Term = std::variant<CategoricalTerm, IndicatorTerm, InteractionTerm>;

struct ModelSpec {
    std::string response = "banner_exists";
    std::vector<Term> terms;
    std::string label;  // display form, e.g. "banner_exists ~ TLD + VPN_EU"
};

namespace impl {

inline double indicator_value(const ObservationRow& row, const std::string& name) {
    if (name == "VPN_EU") return row.vpn_eu ? 1.0 : 0.0;
    if (name.starts_with("TLD_")) return row.tld == name.substr(4) ? 1.0 : 0.0;
    if (name.starts_with("VPN_")) return row.vpn == name.substr(4) ? 1.0 : 0.0;
    throw StatError(StatError::Code::UnknownTerm, "unknown indicator: " + name);
}

inline const std::string& categorical_value(const ObservationRow& row,
                                            const std::string& variable) {
    if (variable == "TLD") return row.tld;
    if (variable == "VPN") return row.vpn;
    throw StatError(StatError::Code::UnknownTerm, "unknown variable: " + variable);
}

}  // namespace impl

struct DesignMatrix {
    detail::Matrix x;                      // n x k, first column all ones
    std::vector<double> y;                 // 0/1 response
    std::vector<std::string> column_names;  // "Intercept", "TLD[at]", ...
};

// Column order: intercept, expanded categoricals (levels sorted, baseline
// dropped), indicators, interactions.
inline DesignMatrix build_design_matrix(const std::vector<ObservationRow>& rows,
                                        const ModelSpec& spec) {
    if (rows.empty()) throw StatError(StatError::Code::EmptyData, "no rows");

    struct Column {
        std::string name;
        std::function<double(const ObservationRow&)> value;
    };
    std::vector<Column> columns;
    columns.push_back({"Intercept", [](const ObservationRow&) { return 1.0; }});

    for (const auto& term : spec.terms) {
        if (const auto* cat = std::get_if<CategoricalTerm>(&term)) {
            std::set<std::string> levels;
            for (const auto& row : rows) levels.insert(impl::categorical_value(row, cat->variable));
            std::string baseline = cat->baseline.empty() ? *levels.begin() : cat->baseline;
            if (!levels.contains(baseline))
                throw StatError(StatError::Code::UnknownBaseline,
                                "baseline level '" + baseline + "' absent from data");
            for (const auto& level : levels) {
                if (level == baseline) continue;
                columns.push_back({cat->variable + "[" + level + "]",
                                   [variable = cat->variable, level](const ObservationRow& r) {
                                       return impl::categorical_value(r, variable) == level
                                                  ? 1.0
                                                  : 0.0;
                                   }});
            }
        }
    }
    for (const auto& term : spec.terms) {
        if (const auto* ind = std::get_if<IndicatorTerm>(&term)) {
            columns.push_back({ind->name, [name = ind->name](const ObservationRow& r) {
                                   return impl::indicator_value(r, name);
                               }});
        }
    }
    for (const auto& term : spec.terms) {
        if (const auto* inter = std::get_if<InteractionTerm>(&term)) {
            columns.push_back({inter->a.name + ":" + inter->b.name,
                               [a = inter->a.name, b = inter->b.name](const ObservationRow& r) {
                                   return impl::indicator_value(r, a) *
                                          impl::indicator_value(r, b);
                               }});
        }
    }

    DesignMatrix out;
    out.x = detail::Matrix(rows.size(), columns.size());
    out.y.reserve(rows.size());
    for (size_t i = 0; i < rows.size(); ++i) {
        for (size_t j = 0; j < columns.size(); ++j) out.x(i, j) = columns[j].value(rows[i]);
        out.y.push_back(rows[i].banner_exists ? 1.0 : 0.0);
    }
    for (const auto& c : columns) out.column_names.push_back(c.name);
    return out;
}

// --- logistic regression --------------------------------------------------

struct FitResult {
    std::vector<double> beta;
    std::vector<double> standard_errors;
    double log_likelihood = 0.0;
    double null_log_likelihood = 0.0;
    size_t k = 0;  // estimated parameters, intercept included (df = k - 1)
    size_t n = 0;
    bool converged = false;
    int iterations = 0;
    std::vector<std::string> column_names;
};

namespace impl {

inline double bernoulli_loglik(const detail::Matrix& x, const std::vector<double>& y,
                               const std::vector<double>& beta) {
    double ll = 0.0;
    size_t n = x.rows();
    size_t k = x.cols();
    for (size_t i = 0; i < n; ++i) {
        double eta = 0.0;
        for (size_t j = 0; j < k; ++j) eta += x(i, j) * beta[j];
        // y*eta - log(1 + e^eta), stable on both tails
        double log1pexp = eta > 30.0 ? eta : std::log1p(std::exp(eta));
        ll += y[i] * eta - log1pexp;
    }
    return ll;
}

inline double intercept_only_loglik(const std::vector<double>& y) {
    double mean = 0.0;
    for (double v : y) mean += v;
    mean /= static_cast<double>(y.size());
    double ll = 0.0;
    if (mean > 0.0) ll += mean * std::log(mean);
    if (mean < 1.0) ll += (1.0 - mean) * std::log(1.0 - mean);
    return ll * static_cast<double>(y.size());
}

// X^T W X with W = diag(w); ridge added to the diagonal when requested.
inline detail::Matrix weighted_gram(const detail::Matrix& x, const std::vector<double>& w,
                                    double ridge) {
    size_t n = x.rows();
    size_t k = x.cols();
    detail::Matrix h(k, k);
    for (size_t i = 0; i < n; ++i) {
        double wi = w[i];
        if (wi == 0.0) continue;
        for (size_t a = 0; a < k; ++a) {
            double xa = x(i, a) * wi;
            if (xa == 0.0) continue;
            for (size_t b = a; b < k; ++b) h(a, b) += xa * x(i, b);
        }
    }
    for (size_t a = 0; a < k; ++a) {
        for (size_t b = 0; b < a; ++b) h(a, b) = h(b, a);
        h(a, a) += ridge;
    }
    return h;
}

// Factor X^T W X, retrying once with a tiny ridge when W drives it
// near-singular (quasi-separation).
inline detail::Matrix factor_information(const detail::Matrix& x, const std::vector<double>& w) {
    detail::Matrix h = weighted_gram(x, w, 0.0);
    if (cholesky_factor(h)) return h;
    h = weighted_gram(x, w, 1e-10);
    if (cholesky_factor(h)) return h;
    throw StatError(StatError::Code::RankDeficient, "information matrix not positive definite");
}

}  // namespace impl

inline constexpr double kSeparationBetaLimit = 30.0;

// Maximum-likelihood logistic fit by iteratively reweighted least squares
// (Newton steps with step-halving). Convergence is max |X^T (y - p)| <=
// tol, followed by one polishing step. Throws RankDeficient when X is not
// full column rank and SeparationDetected when any coefficient passes 30
// during iteration; returns converged=false after max_iter.
inline FitResult fit_logit(const detail::Matrix& x, const std::vector<double>& y,
                           double tol = 1e-8, int max_iter = 100) {
    size_t n = x.rows();
    size_t k = x.cols();
    if (n == 0 || k == 0) throw StatError(StatError::Code::EmptyData, "empty design");
    if (y.size() != n) throw std::invalid_argument("fit_logit: y size mismatch");
    for (double v : y)
        if (v != 0.0 && v != 1.0) throw std::invalid_argument("fit_logit: y must be 0/1");

    {
        // full-column-rank precheck on X^T X
        std::vector<double> ones(n, 1.0);
        detail::Matrix gram = impl::weighted_gram(x, ones, 0.0);
        if (!detail::cholesky_factor(gram))
            throw StatError(StatError::Code::RankDeficient, "X is not full column rank");
    }

    std::vector<double> beta(k, 0.0);
    std::vector<double> p(n), w(n), score(k);
    double ll = impl::bernoulli_loglik(x, y, beta);
    int iterations = 0;
    bool converged = false;

    auto compute_p_w_score = [&] {
        std::fill(score.begin(), score.end(), 0.0);
        for (size_t i = 0; i < n; ++i) {
            double eta = 0.0;
            for (size_t j = 0; j < k; ++j) eta += x(i, j) * beta[j];
            double pi = 1.0 / (1.0 + std::exp(-eta));
            p[i] = pi;
            w[i] = pi * (1.0 - pi);
            double resid = y[i] - pi;
            for (size_t j = 0; j < k; ++j) score[j] += x(i, j) * resid;
        }
    };

    auto newton_step = [&]() -> bool {  // returns false when the step stalls
        detail::Matrix lfac = impl::factor_information(x, w);
        std::vector<double> delta = detail::cholesky_solve(lfac, score);
        double step = 1.0;
        for (int half = 0; half < 40; ++half) {
            std::vector<double> candidate(k);
            for (size_t j = 0; j < k; ++j) candidate[j] = beta[j] + step * delta[j];
            double cand_ll = impl::bernoulli_loglik(x, y, candidate);
            if (std::isfinite(cand_ll) && cand_ll >= ll - 1e-12) {
                beta = std::move(candidate);
                ll = cand_ll;
                return true;
            }
            step *= 0.5;
        }
        return false;
    };

    for (; iterations < max_iter; ++iterations) {
        compute_p_w_score();
        double max_score = 0.0;
        for (double s : score) max_score = std::max(max_score, std::fabs(s));
        if (max_score <= tol) {
            converged = true;
            newton_step();  // polish
            break;
        }
        if (!newton_step()) break;
        for (double b : beta)
            if (std::fabs(b) > kSeparationBetaLimit)
                throw StatError(StatError::Code::SeparationDetected,
                                "coefficient magnitude exceeded 30; data likely separated");
    }

    compute_p_w_score();
    detail::Matrix lfac = impl::factor_information(x, w);
    detail::Matrix cov = detail::cholesky_inverse(lfac);

    FitResult fit;
    fit.beta = beta;
    fit.standard_errors.resize(k);
    for (size_t j = 0; j < k; ++j) fit.standard_errors[j] = std::sqrt(cov(j, j));
    fit.log_likelihood = impl::bernoulli_loglik(x, y, beta);
    fit.null_log_likelihood = impl::intercept_only_loglik(y);
    fit.k = k;
    fit.n = n;
    fit.converged = converged;
    fit.iterations = iterations;
    return fit;
}

inline FitResult fit_logit(const DesignMatrix& design, double tol = 1e-8, int max_iter = 100) {
    FitResult fit = fit_logit(design.x, design.y, tol, max_iter);
    fit.column_names = design.column_names;
    return fit;
}

inline double aic(const FitResult& fit) {
    return 2.0 * static_cast<double>(fit.k) - 2.0 * fit.log_likelihood;
}

inline double mcfadden_r2(const FitResult& fit) {
    if (!(fit.null_log_likelihood < 0.0))
        throw StatError(StatError::Code::DegenerateNull,
                        "null log-likelihood is zero (constant response)");
    return 1.0 - fit.log_likelihood / fit.null_log_likelihood;
}

// Likelihood-ratio p-value against the intercept-only model: chi-square
// survival of 2(l - l0) with k-1 dof, via the regularized incomplete gamma.
inline double llr_pvalue(const FitResult& fit) {
    if (fit.k <= 1) throw std::invalid_argument("llr_pvalue: needs k > 1");
    double stat = 2.0 * (fit.log_likelihood - fit.null_log_likelihood);
    if (stat < 0.0) stat = 0.0;
    return detail::chisq_sf(stat, static_cast<double>(fit.k - 1));
}

// --- odds ratios ------------------------------------------------------------

struct OddsRatio {
    double pct_change;  // (e^beta - 1) * 100
    double ci_low_pct;
    double ci_high_pct;
};

// 95% interval via the normal approximation (beta +/- 1.96 se), both ends
// pushed through the same transform. Display rounds to whole percent.
inline OddsRatio odds_ratio(double coef, double se) {
    auto pct = [](double b) { return (std::exp(b) - 1.0) * 100.0; };
    return {pct(coef), pct(coef - 1.96 * se), pct(coef + 1.96 * se)};
}

// --- model comparison -------------------------------------------------------

struct ModelComparison {
    ModelSpec spec;
    std::optional<double> aic;       // empty when the fit failed
    std::optional<FitResult> fit;
    std::string error;               // failure note for this spec
};

inline std::vector<ModelComparison> compare_models(const std::vector<ObservationRow>& rows,
                                                   const std::vector<ModelSpec>& specs) {
    if (specs.size() < 2)
        throw std::invalid_argument("compare_models: needs at least two specs");
    std::vector<ModelComparison> out;
    for (const auto& spec : specs) {
        ModelComparison c;
        c.spec = spec;
        try {
            FitResult fit = fit_logit(build_design_matrix(rows, spec));
            c.aic = aic(fit);
            c.fit = std::move(fit);
        } catch (const StatError& e) {
            c.error = e.what();
        }
        out.push_back(std::move(c));
    }
    std::stable_sort(out.begin(), out.end(), [](const ModelComparison& a,
                                                const ModelComparison& b) {
        if (a.aic.has_value() != b.aic.has_value()) return a.aic.has_value();
        if (!a.aic) return false;
        return *a.aic < *b.aic;
    });
    return out;
}

// The five candidate formulas of the banner-presence analysis; the TLD
// baseline is the .be level.
inline std::vector<ModelSpec> table3_preset() {
    auto cat = [](std::string var, std::string base) {
        return Term(CategoricalTerm{std::move(var), std::move(base)});
    };
    auto ind = [](std::string name) { return Term(IndicatorTerm{std::move(name)}); };
    auto inter = [](std::string a, std::string b) {
        return Term(InteractionTerm{{std::move(a)}, {std::move(b)}});
    };
    std::vector<ModelSpec> specs;
    specs.push_back({"banner_exists", {cat("VPN", "")}, "banner_exists ~ VPN"});
    specs.push_back({"banner_exists", {cat("TLD", "be")}, "banner_exists ~ TLD"});
    specs.push_back({"banner_exists",
                     {cat("TLD", "be"), cat("VPN", "")},
                     "banner_exists ~ TLD + VPN"});
    specs.push_back({"banner_exists",
                     {cat("TLD", "be"), ind("VPN_EU")},
                     "banner_exists ~ TLD + VPN_EU"});
    specs.push_back({"banner_exists",
                     {cat("TLD", "be"), ind("VPN_EU"), inter("VPN_EU", "TLD_com")},
                     "banner_exists ~ TLD + VPN_EU + VPN_EU:TLD_com"});
    return specs;
}

// Formula strings: "banner_exists ~ TLD + VPN + VPN_EU + A:B". Categorical
// variables TLD and VPN expand against the smallest observed level;
// anything else is an indicator name; ":" builds an interaction.
inline ModelSpec parse_formula(std::string_view formula) {
    size_t tilde = formula.find('~');
    if (tilde == std::string_view::npos)
        throw StatError(StatError::Code::BadFormula, "formula needs '~'");
    std::string response(detail::trim(formula.substr(0, tilde)));
    if (response != "banner_exists")
        throw StatError(StatError::Code::BadFormula,
                        "unsupported response: " + response);
    ModelSpec spec;
    spec.response = response;
    spec.label = std::string(detail::trim(formula));
    std::string_view rhs = formula.substr(tilde + 1);
    for (auto piece : detail::split(rhs, '+')) {
        std::string term(detail::trim(piece));
        if (term.empty())
            throw StatError(StatError::Code::BadFormula, "empty term in formula");
        size_t colon = term.find(':');
        if (colon != std::string::npos) {
            std::string a(detail::trim(std::string_view(term).substr(0, colon)));
            std::string b(detail::trim(std::string_view(term).substr(colon + 1)));
            if (a.empty() || b.empty() || b.find(':') != std::string::npos)
                throw StatError(StatError::Code::BadFormula, "bad interaction: " + term);
            spec.terms.push_back(InteractionTerm{{a}, {b}});
        } else if (term == "TLD" || term == "TLDs" || term == "VPN" || term == "VPNs") {
            std::string var = term.starts_with("TLD") ? "TLD" : "VPN";
            spec.terms.push_back(CategoricalTerm{var, ""});
        } else {
            spec.terms.push_back(IndicatorTerm{term});
        }
    }
    if (spec.terms.empty())
        throw StatError(StatError::Code::BadFormula, "formula has no terms");
    return spec;
}

// --- rank correlation -------------------------------------------------------

struct AssociationResult {
    double rho = 0.0;
    size_t n = 0;
    std::optional<double> p_value;
};

namespace impl {

inline std::vector<double> average_ranks(const std::vector<double>& values) {
    size_t n = values.size();
    std::vector<size_t> order(n);
    for (size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return values[a] < values[b]; });
    std::vector<double> ranks(n);
    size_t i = 0;
    while (i < n) {
        size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
        double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (size_t k = i; k <= j; ++k) ranks[order[k]] = avg;
        i = j + 1;
    }
    return ranks;
}

}  // namespace impl

// Spearman rank correlation with average ranks for ties; p-value from the
// t approximation t = rho * sqrt((n-2) / (1-rho^2)), two-sided.
inline AssociationResult spearman(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("spearman: length mismatch");
    size_t n = xs.size();
    if (n < 3) throw std::invalid_argument("spearman: needs n >= 3");
    std::vector<double> rx = impl::average_ranks(xs);
    std::vector<double> ry = impl::average_ranks(ys);

    double mean = (static_cast<double>(n) + 1.0) / 2.0;
    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (size_t i = 0; i < n; ++i) {
        double dx = rx[i] - mean;
        double dy = ry[i] - mean;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if (sxx == 0.0 || syy == 0.0)
        throw StatError(StatError::Code::ConstantInput, "zero rank variance");

    AssociationResult out;
    out.n = n;
    if (rx == ry) {
        out.rho = 1.0;  // identical rank vectors: exactly monotone increasing
    } else {
        bool reversed = true;
        for (size_t i = 0; i < n && reversed; ++i)
            reversed = rx[i] + ry[i] == static_cast<double>(n) + 1.0;
        out.rho = reversed ? -1.0 : sxy / std::sqrt(sxx * syy);
    }
    if (out.rho >= 1.0 || out.rho <= -1.0) {
        out.p_value = 0.0;
    } else {
        double nu = static_cast<double>(n - 2);
        double t = out.rho * std::sqrt(nu / (1.0 - out.rho * out.rho));
        out.p_value = detail::student_t_two_sided(t, nu);
    }
    return out;
}

// --- grouped statistics -------------------------------------------------------

struct GroupKey {
    std::string tld;
    std::string vantage;  // "ALL" when grouping by TLD only
};

struct GroupCell {
    std::string tld;
    std::string vantage;
    size_t n = 0;
    size_t banner_n = 0;  // numerator of the prevalence fraction
    double prevalence = 0.0;
    std::optional<double> median_height;
    std::optional<double> median_words;
    std::optional<double> median_links;
    size_t height_known_n = 0;
};

enum class GroupBy { Tld, TldVantage };

namespace impl {

// Even-sized samples take the mean of the two middle values.
inline std::optional<double> median(std::vector<double> v) {
    if (v.empty()) return std::nullopt;
    std::sort(v.begin(), v.end());
    size_t n = v.size();
    if (n % 2 == 1) return v[n / 2];
    return (v[n / 2 - 1] + v[n / 2]) / 2.0;
}

}  // namespace impl

// Aggregates per TLD (vantage = "ALL") or per TLD x vantage cell, sorted
// by (tld, vantage). Medians use known values only; height_known_n reports
// how many heights that was.
inline std::vector<GroupCell> group_stats(const std::vector<ObservationRow>& rows, GroupBy by) {
    if (rows.empty()) throw StatError(StatError::Code::EmptyData, "no rows");
    struct Acc {
        size_t n = 0;
        size_t banner_n = 0;
        std::vector<double> heights, words, links;
    };
    std::map<std::pair<std::string, std::string>, Acc> groups;
    for (const auto& row : rows) {
        std::string vantage = by == GroupBy::Tld ? "ALL" : row.vpn;
        Acc& acc = groups[{row.tld, vantage}];
        acc.n++;
        if (row.banner_exists) acc.banner_n++;
        if (row.height) acc.heights.push_back(*row.height);
        if (row.words) acc.words.push_back(*row.words);
        if (row.links) acc.links.push_back(*row.links);
    }
    std::vector<GroupCell> out;
    for (auto& [key, acc] : groups) {
        GroupCell cell;
        cell.tld = key.first;
        cell.vantage = key.second;
        cell.n = acc.n;
        cell.banner_n = acc.banner_n;
        cell.prevalence = static_cast<double>(acc.banner_n) / static_cast<double>(acc.n);
        cell.height_known_n = acc.heights.size();
        cell.median_height = impl::median(std::move(acc.heights));
        cell.median_words = impl::median(std::move(acc.words));
        cell.median_links = impl::median(std::move(acc.links));
        out.push_back(std::move(cell));
    }
    return out;  // std::map iteration keeps (tld, vantage) order
}

// --- detector accuracy -------------------------------------------------------

struct ConfusionCounts {
    long long tp = 0;
    long long tn = 0;
    long long fp = 0;
    long long fn = 0;
    long long crawl_failures = 0;  // excluded from every rate
};

struct Ratio {
    long long num = 0;
    long long den = 1;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

struct ConfusionMetrics {
    Ratio accuracy;  // (tp + tn) / (tp + tn + fp + fn)
    Ratio fpr;       // fp / (fp + tn)
    Ratio fnr;       // fn / (fn + tp)
};

inline ConfusionMetrics confusion_metrics(const ConfusionCounts& c) {
    if (c.tp < 0 || c.tn < 0 || c.fp < 0 || c.fn < 0)
        throw std::invalid_argument("confusion_metrics: negative count");
    long long total = c.tp + c.tn + c.fp + c.fn;
    if (total == 0)
        throw StatError(StatError::Code::UndefinedRate, "no labelled observations");
    if (c.fp + c.tn == 0)
        throw StatError(StatError::Code::UndefinedRate, "no negatives for FPR");
    if (c.fn + c.tp == 0)
        throw StatError(StatError::Code::UndefinedRate, "no positives for FNR");
    return {{c.tp + c.tn, total}, {c.fp, c.fp + c.tn}, {c.fn, c.fn + c.tp}};
}

}  // namespace noticescope::inference

#include "ccm/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ccm {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string pair_direction(const JointTable& t) {
    return t.label_x1 + "/" + t.label_x0 + " => " + t.label_y1;
}

std::string rule_direction(const JointTable& t) {
    return t.label_x1 + " -> " + t.label_y1;
}

MeasureResult undefined_result(MeasureId id, std::string direction, std::string note) {
    MeasureResult r;
    r.id = id;
    r.value = 0.0;
    r.direction = std::move(direction);
    r.defined = false;
    r.note = std::move(note);
    return r;
}

MeasureResult value_result(MeasureId id, double value, std::string direction) {
    MeasureResult r;
    r.id = id;
    r.value = value;
    r.direction = std::move(direction);
    return r;
}

}  // namespace

std::string_view measure_name(MeasureId id) noexcept {
    switch (id) {
        case MeasureId::F: return "f";
        case MeasureId::D: return "d";
        case MeasureId::M: return "m";
        case MeasureId::R: return "r";
        case MeasureId::C: return "c";
        case MeasureId::Z: return "z";
        case MeasureId::S: return "s";
        case MeasureId::N: return "n";
        case MeasureId::L: return "l";
        case MeasureId::Fko: return "fko";
        case MeasureId::BStar: return "bstar";
        case MeasureId::CStar: return "cstar";
        case MeasureId::Rd: return "rd";
        case MeasureId::Rr: return "rr";
        case MeasureId::Pd: return "pd";
        case MeasureId::DeltaStar: return "delta_star";
        case MeasureId::Or: return "or";
        case MeasureId::OrN: return "or_n";
        case MeasureId::Cc: return "cc";
        case MeasureId::Ce: return "ce";
    }
    return "?";
}

std::optional<MeasureId> measure_from_name(std::string_view name) noexcept {
    for (MeasureId id : measure_catalog()) {
        if (measure_name(id) == name) return id;
    }
    return std::nullopt;
}

const std::vector<MeasureId>& measure_catalog() {
    static const std::vector<MeasureId> catalog = {
        MeasureId::F,  MeasureId::D,  MeasureId::M,     MeasureId::R,
        MeasureId::C,  MeasureId::Z,  MeasureId::S,     MeasureId::N,
        MeasureId::L,  MeasureId::Fko, MeasureId::BStar, MeasureId::CStar,
        MeasureId::Rd, MeasureId::Rr, MeasureId::Pd,    MeasureId::DeltaStar,
        MeasureId::Or, MeasureId::OrN, MeasureId::Cc,   MeasureId::Ce,
    };
    return catalog;
}

CorrelationMatrix correlation_matrix(const JointTable& table) {
    const double py1 = table.p_y1();
    const double py0 = 1.0 - py1;
    if (py1 <= 0.0) {
        throw Error(ErrorCode::DegenerateOutcome, "P(" + table.label_y1 + ") = 0");
    }
    if (py0 <= 0.0) {
        throw Error(ErrorCode::DegenerateOutcome, "P(not-" + table.label_y1 + ") = 0");
    }
    CorrelationMatrix m;
    m.m_x1_y1 = table.p_y1_given_x1 / py1;
    m.m_x1_y0 = (1.0 - table.p_y1_given_x1) / py0;
    m.m_x0_y1 = table.p_y1_given_x0 / py1;
    m.m_x0_y0 = (1.0 - table.p_y1_given_x0) / py0;
    m.p_x1 = table.p_x1();
    m.p_y1 = py1;
    return m;
}

RiskMeasures risk_measures(const JointTable& table) {
    const double c1 = table.p_y1_given_x1;
    const double c0 = table.p_y1_given_x0;
    const std::string dir = pair_direction(table);

    RiskMeasures out;
    out.rd = value_result(MeasureId::Rd, c1 - c0, dir);

    if (c1 == 0.0 && c0 == 0.0) {
        out.rr = undefined_result(MeasureId::Rr, dir, "P(y1|x1) = P(y1|x0) = 0");
        out.pd = undefined_result(MeasureId::Pd, dir, "P(y1|x1) = P(y1|x0) = 0");
    } else if (c0 == 0.0) {
        out.rr = value_result(MeasureId::Rr, kInf, dir);
        out.pd = value_result(MeasureId::Pd, 1.0, dir);
    } else {
        const double rr = c1 / c0;
        out.rr = value_result(MeasureId::Rr, rr, dir);
        out.pd = value_result(MeasureId::Pd, std::max(0.0, (rr - 1.0) / rr), dir);
    }

    if (c0 == 1.0) {
        out.delta_star = undefined_result(MeasureId::DeltaStar, dir, "P(y1|x0) = 1");
    } else {
        out.delta_star = value_result(MeasureId::DeltaStar, (c1 - c0) / (1.0 - c0), dir);
    }
    return out;
}

MeasureResult causal_confirmation_cc(const JointTable& table) {
    const double c1 = table.p_y1_given_x1;
    const double c0 = table.p_y1_given_x0;
    const std::string dir = pair_direction(table);
    if (c1 == 0.0 && c0 == 0.0) {
        return undefined_result(MeasureId::Cc, dir, "P(y1|x1) = P(y1|x0) = 0");
    }
    return value_result(MeasureId::Cc, (c1 - c0) / std::max(c1, c0), dir);
}

MeasureResult causal_confirmation_ce(const JointTable& table, bool complement_outcome) {
    const double c1 = table.p_y1_given_x1;
    const double c1_not = 1.0 - c1;  // P(y0|x1)
    const std::string outcome =
        complement_outcome ? negate_label(table.label_y1) : table.label_y1;
    const double numerator = complement_outcome ? c1_not - c1 : c1 - c1_not;
    return value_result(MeasureId::Ce, numerator / std::max(c1, c1_not),
                        table.label_x1 + " => " + outcome);
}

OddsMeasures odds_measures(const JointTable& table) {
    const double c1 = table.p_y1_given_x1;
    const double c0 = table.p_y1_given_x0;
    const std::string dir = pair_direction(table);

    OddsMeasures out;
    const double num = c1 * (1.0 - c0);
    const double den = c0 * (1.0 - c1);
    if (num == 0.0 && den == 0.0) {
        out.odds_ratio = undefined_result(MeasureId::Or, dir, "odds ratio is 0/0");
        out.or_n = undefined_result(MeasureId::OrN, dir, "odds ratio is 0/0");
        return out;
    }
    const double odds = den == 0.0 ? kInf : num / den;
    out.odds_ratio = value_result(MeasureId::Or, odds, dir);
    out.or_n = value_result(MeasureId::OrN,
                            std::isinf(odds) ? 1.0 : (odds - 1.0) / std::max(odds, 1.0), dir);
    return out;
}

std::map<MeasureId, MeasureResult> bayesian_suite(const JointTable& table) {
    const double px1 = table.p_x1();
    const double c1 = table.p_y1_given_x1;  // P(h1|e1)
    const double c0 = table.p_y1_given_x0;  // P(h1|e0)
    const double py1 = table.p_y1();
    const double py0 = 1.0 - py1;
    const double j11 = table.joint_x1_y1();
    const double j10 = table.joint_x1_y0();
    const std::string dir = rule_direction(table);

    // Inverted conditionals P(e|h) = P(x|y).
    const bool y1_ok = py1 > 0.0;
    const bool y0_ok = py0 > 0.0;
    const double pe1_h1 = y1_ok ? j11 / py1 : 0.0;  // P(x1|y1)
    const double pe1_h0 = y0_ok ? j10 / py0 : 0.0;  // P(x1|y0)

    std::map<MeasureId, MeasureResult> out;
    out[MeasureId::F] = value_result(MeasureId::F, c1, dir);
    out[MeasureId::D] = value_result(MeasureId::D, c1 - py1, dir);
    out[MeasureId::C] = value_result(MeasureId::C, j11 - px1 * py1, dir);
    out[MeasureId::S] = value_result(MeasureId::S, c1 - c0, dir);
    const double c1_not = 1.0 - c1;
    out[MeasureId::CStar] =
        value_result(MeasureId::CStar, (c1 - c1_not) / std::max(c1, c1_not), dir);

    if (!y1_ok) {
        const std::string note = "P(h1) = 0";
        out[MeasureId::M] = undefined_result(MeasureId::M, dir, note);
        out[MeasureId::R] = undefined_result(MeasureId::R, dir, note);
    } else {
        out[MeasureId::M] = value_result(MeasureId::M, pe1_h1 - px1, dir);
        out[MeasureId::R] =
            value_result(MeasureId::R, c1 == 0.0 ? -kInf : std::log2(c1 / py1), dir);
    }

    if (c1 >= py1) {
        if (py1 >= 1.0) {
            out[MeasureId::Z] = undefined_result(MeasureId::Z, dir, "P(h1) = 1");
        } else {
            out[MeasureId::Z] = value_result(MeasureId::Z, (c1 - py1) / (1.0 - py1), dir);
        }
    } else {
        out[MeasureId::Z] = value_result(MeasureId::Z, (c1 - py1) / py1, dir);
    }

    if (!y1_ok || !y0_ok) {
        const std::string note = y1_ok ? "P(h0) = 0" : "P(h1) = 0";
        for (MeasureId id : {MeasureId::N, MeasureId::L, MeasureId::Fko, MeasureId::BStar}) {
            out[id] = undefined_result(id, dir, note);
        }
        return out;
    }

    out[MeasureId::N] = value_result(MeasureId::N, pe1_h1 - pe1_h0, dir);

    if (pe1_h1 == 0.0 && pe1_h0 == 0.0) {
        const std::string note = "P(e1|h1) = P(e1|h0) = 0";
        out[MeasureId::L] = undefined_result(MeasureId::L, dir, note);
        out[MeasureId::Fko] = undefined_result(MeasureId::Fko, dir, note);
        out[MeasureId::BStar] = undefined_result(MeasureId::BStar, dir, note);
    } else {
        double l = 0.0;
        if (pe1_h0 == 0.0) {
            l = kInf;
        } else if (pe1_h1 == 0.0) {
            l = -kInf;
        } else {
            l = std::log2(pe1_h1 / pe1_h0);
        }
        out[MeasureId::L] = value_result(MeasureId::L, l, dir);
        out[MeasureId::Fko] =
            value_result(MeasureId::Fko, (pe1_h1 - pe1_h0) / (pe1_h1 + pe1_h0), dir);
        out[MeasureId::BStar] =
            value_result(MeasureId::BStar, (pe1_h1 - pe1_h0) / std::max(pe1_h1, pe1_h0), dir);
    }
    return out;
}

CorrelationPrediction predict_with_correlation(const CorrelationMatrix& m, double p_x1,
                                               double p_y1) {
    if (!(p_x1 >= 0.0 && p_x1 <= 1.0) || !(p_y1 >= 0.0 && p_y1 <= 1.0)) {
        throw Error(ErrorCode::InvalidProbability, "marginals must be in [0,1]");
    }
    const double p_x0 = 1.0 - p_x1;
    const double p_y0 = 1.0 - p_y1;

    const double norm_x1 = p_y1 * m.m_x1_y1 + p_y0 * m.m_x1_y0;
    const double norm_x0 = p_y1 * m.m_x0_y1 + p_y0 * m.m_x0_y0;
    const double norm_y1 = p_x1 * m.m_x1_y1 + p_x0 * m.m_x0_y1;
    if (norm_x1 <= 0.0 || norm_x0 <= 0.0 || norm_y1 <= 0.0) {
        throw Error(ErrorCode::DegenerateMarginal, "prediction normalizer is 0");
    }

    CorrelationPrediction out;
    out.p_y1_given_x1 = p_y1 * m.m_x1_y1 / norm_x1;
    out.p_y1_given_x0 = p_y1 * m.m_x0_y1 / norm_x0;
    out.p_x1_given_y1 = p_x1 * m.m_x1_y1 / norm_y1;
    out.p_x0_given_y1 = p_x0 * m.m_x0_y1 / norm_y1;
    return out;
}

std::vector<MeasureResult> compute_measures(const JointTable& table,
                                            const std::vector<MeasureId>& ids) {
    std::optional<std::map<MeasureId, MeasureResult>> suite;
    std::optional<RiskMeasures> risk;
    std::optional<OddsMeasures> odds;

    auto suite_result = [&](MeasureId id) {
        if (!suite) suite = bayesian_suite(table);
        return suite->at(id);
    };

    std::vector<MeasureResult> out;
    out.reserve(ids.size());
    for (MeasureId id : ids) {
        switch (id) {
            case MeasureId::Rd:
            case MeasureId::Rr:
            case MeasureId::Pd:
            case MeasureId::DeltaStar: {
                if (!risk) risk = risk_measures(table);
                if (id == MeasureId::Rd) out.push_back(risk->rd);
                if (id == MeasureId::Rr) out.push_back(risk->rr);
                if (id == MeasureId::Pd) out.push_back(risk->pd);
                if (id == MeasureId::DeltaStar) out.push_back(risk->delta_star);
                break;
            }
            case MeasureId::Or:
            case MeasureId::OrN: {
                if (!odds) odds = odds_measures(table);
                out.push_back(id == MeasureId::Or ? odds->odds_ratio : odds->or_n);
                break;
            }
            case MeasureId::Cc:
                out.push_back(causal_confirmation_cc(table));
                break;
            case MeasureId::Ce:
                out.push_back(causal_confirmation_ce(table));
                break;
            default:
                out.push_back(suite_result(id));
                break;
        }
    }
    return out;
}

}  // namespace ccm

#include "defk/report.hpp"

#include "defk/formulas.hpp"
#include "defk/matrix.hpp"
#include "defk/parallelism.hpp"

namespace defk {

namespace {

void add_shape(Json& out, const Configuration& config) {
    out["points"] = config.points();
    out["lines"] = config.line_count();
    out["points_per_line"] = config.points_per_line();
    out["lines_per_point"] = config.lines_per_point();
    out["symmetric"] = config.symmetric();
}

void add_parallel_analysis(Json& out, const Configuration& config) {
    if (!config.symmetric()) return;
    const DerivedParams params = derived_params(config);
    out["n"] = params.order;
    out["k"] = params.deficiency;

    const bool tops = has_tops(config);
    out["tops"] = tops;
    out["playfair"] = satisfies_playfair(config);
    if (tops) out["k_net"] = is_k_net(config);

    if (params.deficiency == 3) {
        const ParityVerdict verdict = check_parity_theorem(config);
        out["m"] = verdict.cycle_count;
        out["parity"] = verdict.even ? "even" : "odd";
        out["cycle_lengths"] = verdict.lengths;
        out["is_9_1"] = verdict.matches_nine_one;
        out["theorem_6_1"] = verdict.holds ? "holds" : "violated";
    }
}

}  // namespace

Json check_report(const std::string& input, const Configuration& config) {
    Json out;
    out["report"] = "check";
    out["input"] = input;
    out["valid"] = true;
    add_shape(out, config);
    add_parallel_analysis(out, config);
    return out;
}

Json det_report(const std::string& input, const Configuration& config) {
    Json out;
    out["report"] = "det";
    out["input"] = input;
    add_shape(out, config);

    const IntMatrix incidence = incidence_matrix(config);
    const BigInt det_gram = determinant(gram(incidence));
    out["det_gram"] = det_gram.str();
    out["det_gram_is_square"] = is_perfect_square(det_gram);

    if (!config.symmetric()) return out;

    const BigInt det_incidence = determinant(incidence);
    out["det_incidence"] = det_incidence.str();
    out["incidence_squared_matches"] = det_incidence * det_incidence == det_gram;

    const DerivedParams params = derived_params(config);
    out["n"] = params.order;
    out["k"] = params.deficiency;

    const int n = params.order;
    const int k = params.deficiency;
    if (k >= 2 && n >= k - 1 && (n * n + n) % k == 0 && has_tops(config)) {
        const BigInt closed = closed_form_det(n, k);
        out["closed_form"] = closed.str();
        out["closed_form_agrees"] = closed == det_gram;
    }
    if (k == 3) {
        const ParallelStructure cycles = cycle_decomposition(config);
        CycleSpectrum spectrum{n, {}};
        for (const auto& cycle : cycles.groups) {
            spectrum.lengths.push_back(static_cast<int>(cycle.size()));
        }
        const BigInt eq2 = eq2_det(spectrum);
        out["cycle_lengths"] = spectrum.lengths;
        out["eq2"] = eq2.str();
        out["eq2_agrees"] = eq2 == det_gram;
    }
    return out;
}

Json decompose_report(const std::string& input, const Configuration& config) {
    Json out;
    out["report"] = "decompose";
    out["input"] = input;
    add_shape(out, config);
    if (!config.symmetric()) return out;

    const DerivedParams params = derived_params(config);
    out["n"] = params.order;
    out["k"] = params.deficiency;
    const bool tops = has_tops(config);
    out["tops"] = tops;
    out["playfair"] = satisfies_playfair(config);
    if (tops) {
        out["classes"] = parallel_classes(config).groups;
    }
    if (params.deficiency == 3) {
        const ParallelStructure cycles = cycle_decomposition(config);
        out["cycles"] = cycles.groups;
        const ParityVerdict verdict = check_parity_theorem(config);
        out["m"] = verdict.cycle_count;
        out["parity"] = verdict.even ? "even" : "odd";
        out["is_9_1"] = verdict.matches_nine_one;
        out["theorem_6_1"] = verdict.holds ? "holds" : "violated";
    }
    return out;
}

Json verdict_json(const ParameterVerdict& verdict) {
    Json out;
    out["n"] = verdict.n;
    out["k"] = verdict.k;
    const int v = verdict.n * verdict.n + verdict.n + verdict.k;
    out["params"] = "(" + std::to_string(v) + "_" + std::to_string(verdict.n + 1) + ")";
    out["rule"] = std::string(rule_name(verdict.rule));
    out["verdict"] = std::string(verdict_name(verdict.verdict));
    Json witnesses = Json::object();
    for (const auto& [key, value] : verdict.witnesses) witnesses[key] = value;
    out["witnesses"] = witnesses;
    return out;
}

Json sieve_report(const std::vector<ParameterVerdict>& rows) {
    Json out;
    out["report"] = "sieve";
    Json list = Json::array();
    for (const ParameterVerdict& row : rows) list.push_back(verdict_json(row));
    out["rows"] = list;
    return out;
}

Json enumerate_report(int v, int r, const std::vector<Configuration>& classes) {
    Json out;
    out["report"] = "enumerate";
    out["v"] = v;
    out["r"] = r;
    out["count"] = static_cast<int>(classes.size());
    Json list = Json::array();
    for (size_t i = 0; i < classes.size(); ++i) {
        const Configuration& config = classes[i];
        Json entry;
        entry["index"] = static_cast<int>(i);
        const DerivedParams params = derived_params(config);
        entry["n"] = params.order;
        entry["k"] = params.deficiency;
        entry["tops"] = has_tops(config);
        if (params.deficiency == 3) {
            entry["m"] = static_cast<int>(cycle_decomposition(config).groups.size());
        }
        entry["representative"] = Json{{"points", config.points()},
                                       {"lines", config.lines()}};
        list.push_back(entry);
    }
    out["classes"] = list;
    return out;
}

Json error_json(const Error& error) {
    Json out;
    out["error"] = Json::object();
    out["error"]["fault"] = std::string(fault_name(error.fault()));
    out["error"]["message"] = error.what();
    if (!error.witness().empty()) {
        out["error"]["witness"] = Json::object();
        out["error"]["witness"]["lines"] = error.witness().lines;
        out["error"]["witness"]["points"] = error.witness().points;
    }
    return out;
}

}  // namespace defk

#include "pclique/serialize.hpp"

namespace pclique::io {

Json to_json(const VertexSet& s) { return Json(s.to_vector()); }

Json to_json(const ThetaSolution& sol) {
    Json j;
    j["schema"] = kThetaSchema;
    j["status"] = std::string(to_string(sol.status));
    j["value"] = sol.value;
    j["dual_value"] = sol.dual_value;
    j["iterations"] = sol.iterations;
    j["primal_residual"] = sol.primal_residual;
    j["dual_residual"] = sol.dual_residual;
    j["duality_gap"] = sol.duality_gap;
    j["contribution_sum"] = sol.contribution_sum();
    j["raw_contribution_min"] = sol.raw_contribution_min;
    j["raw_contribution_max"] = sol.raw_contribution_max;
    j["contributions"] = sol.contributions;
    return j;
}

Json to_json(const RecoveryReport& rep) {
    Json j;
    j["schema"] = kRecoverySchema;
    j["algorithm"] = rep.algorithm;
    j["k"] = rep.k;
    j["verified"] = rep.verified;
    j["clique_size"] = rep.clique.count();
    j["clique"] = to_json(rep.clique);
    j["H"] = to_json(rep.H);
    j["F"] = to_json(rep.F);
    j["theta_value"] = rep.theta_value;
    j["theta_status"] = std::string(to_string(rep.theta_status));
    j["theta_iterations"] = rep.theta_iterations;
    j["cover_size"] = rep.cover_size;
    j["branch_nodes"] = rep.branch_nodes;
    j["depth_cap"] = rep.depth_cap;
    j["wall_ms"] = rep.wall_ms;
    if (rep.algorithm == "guess") {
        j["s_formula"] = rep.s_formula;
        j["s_used"] = rep.s_used;
        j["s_capped"] = rep.s_capped;
        j["candidates_enumerated"] = rep.candidates_enumerated;
        j["theta_runs"] = rep.theta_runs;
        j["budget_exhausted"] = rep.budget_exhausted;
    }
    return j;
}

Json to_json(const EnumReport& rep) {
    Json j;
    j["max_clique"] = to_json(rep.max_clique);
    j["max_clique_size"] = rep.max_clique.count();
    j["maximal_count"] = rep.maximal_count;
    j["clique_budget"] = rep.clique_budget;
    j["truncated"] = rep.truncated;
    return j;
}

Json to_json(const SparseReport& rep) {
    Json j;
    j["schema"] = kRecoverySchema;
    j["algorithm"] = "enumerate";
    j["k"] = rep.k;
    j["verified"] = rep.verified;
    j["clique_size"] = rep.listing.max_clique.count();
    j["clique"] = to_json(rep.listing.max_clique);
    j["maximal_count"] = rep.listing.maximal_count;
    j["truncated"] = rep.listing.truncated;
    j["budget"] = rep.budget;
    j["T"] = rep.T;
    j["p"] = rep.p;
    j["in_regime"] = rep.in_regime;
    j["regime_threshold"] = rep.regime_threshold;
    if (!rep.warning.empty()) j["warning"] = rep.warning;
    return j;
}

Json to_json(const CertificateReport& rep, const VarBoundResult& varbound) {
    Json j;
    j["schema"] = kCertificateSchema;
    j["Q"] = to_json(rep.Q);
    j["k_prime"] = rep.k_prime;
    j["valid"] = rep.valid;
    j["lambda1"] = rep.lambda1;
    j["lambda2"] = rep.lambda2;
    j["lambda1_U"] = rep.lambda1_U;
    j["lambda2_V"] = rep.lambda2_V;
    j["lambda1_W"] = rep.lambda1_W;
    j["weyl_bound"] = rep.weyl_bound;
    j["trace_W2"] = rep.trace_W2;
    j["lambda2_reference_bound"] = rep.lambda2_reference_bound;
    j["lambda1_unit_diagonal"] = rep.lambda1_unit_diagonal;
    j["lambda2_unit_diagonal"] = rep.lambda2_unit_diagonal;
    j["reconstruction_error"] = rep.reconstruction_error;
    j["eigenvector_residual"] = rep.eigenvector_residual;
    j["membership_rule_holds"] = rep.membership_rule_holds;
    j["q_clique_in_planted"] = rep.q_clique_in_planted;
    Json outside = Json::array();
    for (std::size_t i = 0; i < rep.outside.size(); ++i) {
        outside.push_back({{"vertex", rep.outside[i]}, {"d", rep.outside_degrees[i]}, {"x", rep.x_weights[i]}});
    }
    j["outside"] = std::move(outside);
    j["varbound"] = {{"lhs", varbound.lhs}, {"expected", varbound.expected}, {"rhs", varbound.rhs}, {"ok", varbound.ok}};
    return j;
}

Json to_json(const ReductionOutput& out) {
    Json j;
    j["schema"] = kReductionSchema;
    j["t"] = out.t;
    j["vertices"] = out.gadget.order();
    j["edges"] = out.gadget.edge_count();
    j["avg_degree"] = out.alpha_avg.str();
    j["is_shift"] = out.is_shift;
    Json edges = Json::array();
    for (const auto& [u, v] : out.gadget.edges()) edges.push_back({u, v});
    j["edge_list"] = std::move(edges);
    return j;
}

Json to_json(const PlantedHInstance& inst) {
    Json j;
    j["schema"] = kPlantHSchema;
    j["n"] = inst.n;
    j["p"] = inst.p;
    j["k"] = inst.k;
    j["k_prime"] = inst.k_prime;
    j["seed"] = inst.seed;
    j["m"] = inst.partition.m;
    j["M"] = inst.M;
    j["I_prime"] = to_json(inst.I_prime);
    j["failed_default"] = inst.failed_default;
    return j;
}

Json to_json(const AlgrandResult& res) {
    Json j;
    j["schema"] = kAlgrandSchema;
    j["budget"] = res.budget;
    j["answer"] = res.answer ? to_json(*res.answer) : Json(nullptr);
    Json rows = Json::array();
    for (const AlgrandIteration& it : res.transcript) {
        rows.push_back({{"iteration", it.index},
                        {"seed", it.seed},
                        {"failed_default", it.failed_default},
                        {"returned", it.returned},
                        {"independent", it.independent},
                        {"size", it.size},
                        {"in_copy", it.in_copy},
                        {"sound", it.sound},
                        {"success", it.success}});
    }
    j["transcript"] = std::move(rows);
    return j;
}

Json to_json(const PlannerOutput& out) {
    Json j;
    j["schema"] = kPlannerSchema;
    j["p"] = out.p;
    j["alpha_range"] = {out.alpha_min, out.alpha_max};
    j["alpha"] = out.alpha;
    j["rho_max"] = out.rho_max;
    j["rho"] = out.rho;
    j["m"] = out.m;
    j["k_range"] = {out.k_min, out.k_max};
    j["copy_density_ok"] = out.copy_density_ok;
    j["copy_variance_ok"] = out.copy_variance_ok;
    j["copy_variance_ok_without_2"] = out.copy_variance_ok_without_2;
    j["log_expected_copies"] = out.log_expected_copies;
    j["feasible"] = out.feasible;
    j["verdict"] = out.verdict;
    return j;
}

Json to_json(const GroundTruth& gt) {
    Json j;
    j["clique"] = to_json(gt.clique);
    j["clique_size"] = gt.clique.count();
    j["candidates"] = gt.candidates.count();
    j["cover_nodes"] = gt.cover_nodes;
    j["in_regime"] = gt.in_regime;
    return j;
}

}  // namespace pclique::io

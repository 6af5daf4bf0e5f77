#include <hyperfree/commands.hpp>

#include <hyperfree/errors.hpp>
#include <hyperfree/linalg.hpp>
#include <hyperfree/verifier.hpp>

#include <sstream>

namespace hyperfree {

int exit_code_for(const std::exception& e)
{
    if (dynamic_cast<const InfeasibleError*>(&e) || dynamic_cast<const DeltaTooLargeError*>(&e))
        return kExitInfeasible;
    if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const InvalidDensityError*>(&e) ||
        dynamic_cast<const ImproperGoalError*>(&e) || dynamic_cast<const PartitionError*>(&e) ||
        dynamic_cast<const PreconditionError*>(&e) || dynamic_cast<const DimensionError*>(&e))
        return kExitInvalidInput;
    return kExitInternal;
}

namespace {

std::string show_matrix(const RatMatrix& m, const std::string& indent = "  ")
{
    std::ostringstream os;
    for (Index i = 0; i < m.rows(); ++i) {
        os << indent << "[";
        for (Index j = 0; j < m.cols(); ++j)
            os << (j ? ", " : "") << to_string(m(i, j));
        os << "]\n";
    }
    return os.str();
}

std::string show_vector(const RatVector& v)
{
    std::string s = "(";
    for (Index k = 0; k < v.size(); ++k)
        s += (k ? ", " : "") + to_string(v(k));
    return s + ")";
}

struct Analysis {
    MeasureProfile profile;
    RatMatrix g;
    std::vector<RatVector> kernel;
    RatMatrix g_plus;
};

Analysis analyse(const ProblemFile& problem)
{
    Analysis a{common_refinement(problem.densities), {}, {}, {}};
    a.g = gram_matrix(a.profile);
    a.kernel = kernel_basis(a.g);
    a.g_plus = pseudo_inverse(a.g);
    return a;
}

json kernel_json(const std::vector<RatVector>& kernel)
{
    json arr = json::array();
    for (const RatVector& v : kernel)
        arr.push_back(to_json(v));
    return arr;
}

// Adds G+K, B and the corollary enclosure for k; appends to the summary.
void bound_section(const Analysis& a, const GoalMatrix& k, const TargetPoint& p, const Rational& tol, json& report,
                   std::ostringstream& summary)
{
    report["gplus_k"] = to_json(RatMatrix(a.g_plus * k.matrix()));
    const DeltaBound b = delta_bound(a.g_plus, k, p);
    json bound;
    bound["max_abs_gplus_k"] = to_string(b.max_abs_entry);
    bound["B"] = b.unbounded() ? json("unbounded") : to_json(*b.value);
    report["bound"] = std::move(bound);
    summary << "max |(G+K)_ij| = " << to_string(b.max_abs_entry) << "\n"
            << "B = " << (b.unbounded() ? std::string("unbounded") : to_string(*b.value)) << "\n";

    if (a.kernel.empty() && !k.is_zero()) {
        const Enclosure<Rational> c = corollary_bound(a.g, k, p, tol);
        report["corollary_bound"] = json{{"lo", to_string(c.lo)}, {"hi", to_string(c.hi)}};
        summary << "corollary bound in [" << to_string(c.lo) << ", " << to_string(c.hi) << "]\n";
    }
}

} // namespace

json fairness_json(const FairnessReport& rep)
{
    json out;
    out["proportional"] = rep.proportional;
    out["exact_division"] = rep.exact_division;
    out["equitable"] = rep.equitable;
    out["envy_free"] = rep.envy_free;
    out["super_envy_free"] = rep.super_envy_free;
    if (rep.hyper_envy_free) {
        const HyperEnvyFreeCheck& h = *rep.hyper_envy_free;
        json hj;
        hj["holds"] = h.holds;
        if (h.delta)
            hj["delta"] = to_string(*h.delta);
        else if (h.delta_unconstrained)
            hj["delta"] = "unconstrained";
        else
            hj["delta"] = nullptr;
        hj["K"] = to_json(h.k.matrix());
        hj["p"] = to_json(h.p.values());
        out["hyper_envy_free"] = std::move(hj);
    }
    if (rep.relation_satisfied) {
        out["relation_satisfied"] = json{{"holds", rep.relation_satisfied->holds},
                                         {"R", to_json(rep.relation_satisfied->r)},
                                         {"p", to_json(rep.relation_satisfied->p.values())}};
    }
    out["rawlsian_distance"] = to_string(rep.rawlsian_distance);
    out["welfare"] = to_string(Rational(1 - rep.rawlsian_distance));
    return out;
}

CommandResult cmd_gram(const ProblemFile& problem, const Rational& tol)
{
    const Analysis a = analyse(problem);
    CommandResult res;
    std::ostringstream summary;
    res.report["input"] = to_json(problem);
    res.report["gram"] = to_json(a.g);
    res.report["kernel"] = kernel_json(a.kernel);
    res.report["pseudo_inverse"] = to_json(a.g_plus);
    summary << "Gram matrix G:\n" << show_matrix(a.g) << "measure relations:";
    if (a.kernel.empty())
        summary << " none (measures are linearly independent)";
    for (const RatVector& v : a.kernel)
        summary << " " << show_vector(v);
    summary << "\npseudo-inverse G+:\n" << show_matrix(a.g_plus);
    if (problem.k) {
        const TargetPoint p = problem.p ? *problem.p : TargetPoint::uniform(problem.players);
        bound_section(a, *problem.k, p, tol, res.report, summary);
    }
    res.summary = summary.str();
    return res;
}

CommandResult cmd_solve(const ProblemFile& problem, const Rational& tol, Route route)
{
    if (!problem.k && !problem.r)
        throw PreconditionError("solve needs a goal matrix K or a relation matrix R");

    const Analysis a = analyse(problem);
    const TargetPoint p = problem.p ? *problem.p : TargetPoint::uniform(problem.players);
    CommandResult res;
    std::ostringstream summary;
    json& report = res.report;
    report["input"] = to_json(problem);
    report["gram"] = to_json(a.g);
    report["kernel"] = kernel_json(a.kernel);
    report["pseudo_inverse"] = to_json(a.g_plus);

    GoalMatrix k = GoalMatrix::zero(problem.players);
    if (problem.r) {
        const RelationSolution sol = solve_relations(*problem.r, a.kernel);
        json feas;
        feas["verdict"] = sol.feasible() ? "feasible" : "infeasible";
        if (sol.feasible()) {
            feas["K"] = to_json(sol.k.matrix());
            feas["margin"] = sol.margin ? to_json(*sol.margin) : json("unconstrained");
        }
        report["feasibility"] = std::move(feas);
        if (!sol.feasible()) {
            summary << "relation matrix: infeasible, no proper K has the requested signs\n";
            res.summary = summary.str();
            res.exit_code = kExitInfeasible;
            return res;
        }
        summary << "relation matrix: feasible, witness K:\n" << show_matrix(sol.k.matrix());
        k = sol.k;
    } else {
        const ProperReport proper = is_proper(*problem.k, a.kernel);
        if (!proper)
            throw ImproperGoalError(proper.message);
        k = *problem.k;
        report["feasibility"] = json{{"verdict", "feasible"}, {"K", to_json(k.matrix())}};
    }

    bound_section(a, k, p, tol, report, summary);

    const DeltaMode mode = problem.delta ? *problem.delta : DeltaMode{MaximizeDelta{}};
    std::optional<Rational> delta;
    std::optional<WeightSystem> weights;
    try {
        if (route == Route::Lp) {
            AlphaSolution sol = solve_alpha(a.profile, k, p, mode);
            delta = sol.delta;
            weights = std::move(sol.weights);
        } else {
            const DeltaBound b = delta_bound(a.g_plus, k, p);
            const Rational d = std::holds_alternative<FixedDelta>(mode) ? std::get<FixedDelta>(mode).delta
                                                                        : (b.unbounded() ? Rational(0) : *b.value);
            const HyperFreeCertificate cert = stochastic_factor(a.g, a.g_plus, k, p, d);
            report["stochastic_factor"] = to_json(cert.stochastic);
            delta = d;
            weights = theorem1_weights(a.profile, cert);
        }
    } catch (const InfeasibleError& e) {
        report["construction"] = json{{"verdict", "infeasible"}, {"reason", e.what()}};
        summary << e.what() << "\n";
        res.summary = summary.str();
        res.exit_code = kExitInfeasible;
        return res;
    } catch (const DeltaTooLargeError& e) {
        report["construction"] = json{{"verdict", "delta too large"}, {"reason", e.what()}};
        summary << e.what() << "\n";
        res.summary = summary.str();
        res.exit_code = kExitInfeasible;
        return res;
    }

    report["route"] = route == Route::Lp ? "lp" : "theorem1";
    report["delta"] = delta ? to_json(*delta) : json("unconstrained");
    json atoms = json::array();
    for (const Interval& iv : a.profile.atoms())
        atoms.push_back(to_json(iv));
    report["atoms"] = std::move(atoms);
    report["weights"] = to_json(weights->alpha());

    const Partition part = build_from_weights(a.profile, *weights);
    const SharingMatrix m = sharing_matrix(a.profile, part);
    FairnessOptions opts;
    opts.k = k;
    opts.p = p;
    opts.r = problem.r;
    if (delta && *delta > 0)
        opts.delta = delta;
    const FairnessReport fair = check_fairness(m, opts);
    report["partition"] = to_json(part);
    report["sharing_matrix"] = to_json(m.matrix());
    report["fairness"] = fairness_json(fair);

    summary << "delta = " << (delta ? to_string(*delta) : std::string("unconstrained")) << "\npartition:\n";
    for (Index j = 0; j < part.players(); ++j) {
        summary << "  X" << j + 1 << " =";
        if (part.pieces(j).empty())
            summary << " (empty)";
        for (std::size_t q = 0; q < part.pieces(j).size(); ++q)
            summary << (q ? " u " : " ") << "[" << to_string(part.pieces(j)[q].lo) << ", "
                    << to_string(part.pieces(j)[q].hi) << "]";
        summary << "\n";
    }
    summary << "sharing matrix:\n" << show_matrix(m.matrix());
    if (fair.hyper_envy_free)
        summary << "hyper envy-free: " << (fair.hyper_envy_free->holds ? "yes" : "no") << "\n";
    if (fair.relation_satisfied)
        summary << "relations satisfied: " << (fair.relation_satisfied->holds ? "yes" : "no") << "\n";
    res.summary = summary.str();
    return res;
}

CommandResult cmd_verify(const ProblemFile& problem, const Partition& part, const std::vector<std::string>& require)
{
    const MeasureProfile profile = common_refinement(problem.densities);
    const SharingMatrix m = sharing_matrix(profile, part);
    FairnessOptions opts;
    opts.k = problem.k;
    opts.p = problem.p;
    opts.r = problem.r;
    if (problem.delta && std::holds_alternative<FixedDelta>(*problem.delta))
        opts.delta = std::get<FixedDelta>(*problem.delta).delta;
    const FairnessReport fair = check_fairness(m, opts);

    CommandResult res;
    res.report["input"] = to_json(problem);
    res.report["partition"] = to_json(part);
    res.report["sharing_matrix"] = to_json(m.matrix());
    res.report["fairness"] = fairness_json(fair);

    std::vector<std::pair<std::string, bool>> checks;
    if (fair.hyper_envy_free)
        checks.emplace_back("hyper_envy_free", fair.hyper_envy_free->holds);
    if (fair.relation_satisfied)
        checks.emplace_back("relation_satisfied", fair.relation_satisfied->holds);
    for (const std::string& name : require) {
        if (name == "proportional")
            checks.emplace_back(name, fair.proportional);
        else if (name == "exact" || name == "exact_division")
            checks.emplace_back(name, fair.exact_division);
        else if (name == "equitable")
            checks.emplace_back(name, fair.equitable);
        else if (name == "envy_free")
            checks.emplace_back(name, fair.envy_free);
        else if (name == "super_envy_free")
            checks.emplace_back(name, fair.super_envy_free);
        else
            throw PreconditionError("unknown predicate '" + name + "'");
    }

    std::ostringstream summary;
    summary << "sharing matrix:\n" << show_matrix(m.matrix());
    summary << "proportional: " << fair.proportional << "  exact: " << fair.exact_division
            << "  equitable: " << fair.equitable << "  envy-free: " << fair.envy_free
            << "  super envy-free: " << fair.super_envy_free << "\n";
    if (fair.hyper_envy_free) {
        summary << "hyper envy-free: " << (fair.hyper_envy_free->holds ? "yes" : "no");
        if (fair.hyper_envy_free->delta)
            summary << " (delta = " << to_string(*fair.hyper_envy_free->delta) << ")";
        summary << "\n";
    }
    summary << "rawlsian distance: " << to_string(fair.rawlsian_distance) << "\n";
    for (const auto& [name, ok] : checks)
        if (!ok) {
            summary << "FAILED: " << name << "\n";
            res.exit_code = kExitInfeasible;
        }
    res.report["requested"] = json::object();
    for (const auto& [name, ok] : checks)
        res.report["requested"][name] = ok;
    res.summary = summary.str();
    return res;
}

} // namespace hyperfree

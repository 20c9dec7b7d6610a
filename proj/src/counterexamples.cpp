#include "gmorder/veriharness.hpp"

namespace gmorder {

namespace {

PopulationSpec independent(std::initializer_list<GMParams> ms) {
    return PopulationSpec(std::vector<GMParams>(ms));
}

std::vector<CounterexampleSpec> build_registry() {
    std::vector<CounterexampleSpec> r;
    r.push_back({"CE-MIN-LR-A",
                 independent({{0.1, 0.2, 0.6}, {20.0, 0.1, 0.5}}),
                 independent({{2.1, 0.2, 0.6}, {18.0, 0.1, 0.5}}),
                 Extreme::Min, Relation::Lr,
                 "alpha=(0.1,20) majorizes alpha*=(2.1,18), both in E+, beta=(0.2,0.1) in D+, "
                 "lambda=(0.6,0.5): no lr order between the minima"});
    r.push_back({"CE-MIN-LR-B",
                 independent({{20.0, 0.8, 0.5}, {0.1, 0.2, 0.6}}),
                 independent({{20.0, 0.7, 0.5}, {0.1, 0.3, 0.6}}),
                 Extreme::Min, Relation::Lr,
                 "alpha=(20,0.1), beta=(0.8,0.2) majorizes beta*=(0.7,0.3), lambda=(0.5,0.6): "
                 "no lr order between the minima"});
    r.push_back({"CE-MAX-ST-1",
                 independent({{0.2, 2.0, 0.6}, {0.1, 1.0, 0.6}}),
                 independent({{0.18, 2.0, 0.6}, {0.12, 1.0, 0.6}}),
                 Extreme::Max, Relation::St,
                 "lambda=0.6, beta=(2,1), alpha=(0.2,0.1) majorizes alpha*=(0.18,0.12): "
                 "F_{2:2}-G_{2:2} changes sign"});
    r.push_back({"CE-MAX-ST-2",
                 independent({{0.1, 1.0 / 2.0, 0.02}, {0.2, 1.0, 0.02}}),
                 independent({{0.1, 1.0 / 1.6, 0.02}, {0.2, 1.0 / 1.4, 0.02}}),
                 Extreme::Max, Relation::St,
                 "lambda=0.02, beta=(1/2,1), beta*=(1/1.6,1/1.4), alpha=(0.1,0.2): "
                 "no st order between the maxima"});
    r.push_back({"CE-MAX-RH-1",
                 independent({{20.0, 2.0, 0.6}, {0.1, 2.0, 0.5}}),
                 independent({{18.0, 2.0, 0.6}, {2.1, 2.0, 0.5}}),
                 Extreme::Max, Relation::Rh,
                 "beta=2, lambda=(0.6,0.5), alpha=(20,0.1) majorizes alpha*=(18,2.1): "
                 "no rh order between the maxima"});
    r.push_back({"CE-MAX-RH-2",
                 independent({{0.02, 0.2, 0.07}, {0.01, 0.2, 0.05}}),
                 independent({{0.02, 0.2, 0.06}, {0.01, 0.2, 0.06}}),
                 Extreme::Max, Relation::Rh,
                 "beta=0.2, alpha=(0.02,0.01), lambda=(0.07,0.05) majorizes lambda*=(0.06,0.06): "
                 "no rh order between the maxima"});
    r.push_back({"CE-MAX-RH-3",
                 independent({{0.02, 0.2, 0.07}, {0.02, 0.1, 0.05}}),
                 independent({{0.02, 0.2, 0.06}, {0.02, 0.1, 0.06}}),
                 Extreme::Max, Relation::Rh,
                 "alpha=0.02, beta=(0.2,0.1), lambda=(0.07,0.05) majorizes lambda*=(0.06,0.06): "
                 "no rh order between the maxima"});
    r.push_back({"CE-MAX-RH-4",
                 independent({{0.02, 1.0 / 0.3, 0.05}, {0.02, 1.0 / 0.1, 0.07}}),
                 independent({{0.02, 1.0 / 0.2, 0.05}, {0.02, 1.0 / 0.2, 0.07}}),
                 Extreme::Max, Relation::Rh,
                 "alpha=0.02, lambda=(0.05,0.07), 1/beta=(0.3,0.1) majorizes 1/beta*=(0.2,0.2): "
                 "no rh order between the maxima"});
    return r;
}

}  // namespace

const std::vector<CounterexampleSpec>& counterexample_registry() {
    static const std::vector<CounterexampleSpec> registry = build_registry();
    return registry;
}

const CounterexampleSpec* find_counterexample(const std::string& id) {
    for (const auto& ce : counterexample_registry()) {
        if (ce.id == id) return &ce;
    }
    return nullptr;
}

CounterexampleReport run_counterexample(const CounterexampleSpec& ce,
                                        const std::optional<Grid>& grid, const Tolerance& tol) {
    CounterexampleReport rep{ce.id, {}, grid.value_or(default_grid(
                                            comparison_upper(ce.A, ce.B, ce.extreme))),
                             false};
    rep.verdict = check_relation(ce.relation, ce.A, ce.B, ce.extreme, rep.grid, tol);
    rep.reproduced = rep.verdict.status == Status::Violated;
    return rep;
}

}  // namespace gmorder

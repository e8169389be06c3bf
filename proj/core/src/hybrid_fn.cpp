#include "hybridmat/hybrid_fn.hpp"

namespace hybridmat {

HybridFunctionExpr fn_oplus(const HybridFunctionExpr& f, const HybridFunctionExpr& g) {
    std::vector<TermLayer> merged(f.layers().begin(), f.layers().end());
    for (const auto& layer : g.layers()) {
        bool found = false;
        for (auto& existing : merged) {
            if (existing.term.identity() == layer.term.identity()) {
                existing.region = oplus(existing.region, layer.region);
                found = true;
                break;
            }
        }
        if (!found) merged.push_back(layer);
    }
    HybridFunctionExpr out;
    for (auto& layer : merged) out.add_layer(std::move(layer.term), std::move(layer.region));
    return out;
}

std::vector<std::pair<BlockTerm, long long>> net_terms_at(const HybridFunctionExpr& f,
                                                          const ParamEnv& env, Point2 x) {
    std::vector<std::pair<BlockTerm, long long>> nets;
    for (const auto& layer : f.layers()) {
        long long m = layer.region.multiplicity(env, x);
        if (m == 0) continue;
        bool found = false;
        for (auto& [term, net] : nets) {
            if (term.identity() == layer.term.identity()) {
                net += m;
                found = true;
                break;
            }
        }
        if (!found) nets.emplace_back(layer.term, m);
    }
    std::erase_if(nets, [](const auto& n) { return n.second == 0; });
    return nets;
}

Rational reduce_plus(const HybridFunctionExpr& f, const ParamEnv& env, Point2 x) {
    auto nets = net_terms_at(f, env, x);

    // Distribute composites into individual slots and cancel again at slot
    // level; the survivors of a wrong ordering guess cancel here even when
    // they sit inside different composite terms.
    struct SlotNet {
        const ScalarSlot* slot;
        long long net;
    };
    std::vector<std::pair<std::string, SlotNet>> slot_nets;
    for (const auto& [term, net] : nets) {
        for (const auto& slot : term.slots()) {
            std::string key = slot.identity();
            bool found = false;
            for (auto& [k, sn] : slot_nets) {
                if (k == key) {
                    sn.net += net;
                    found = true;
                    break;
                }
            }
            if (!found) slot_nets.emplace_back(std::move(key), SlotNet{&slot, net});
        }
    }

    Rational sum;
    for (const auto& [key, sn] : slot_nets) {
        if (sn.net == 0) continue;
        auto v = sn.slot->value_at(env, x);
        if (!v)
            throw UndefinedTermForced("term " + key + " forced at (" + std::to_string(x.row) +
                                      "," + std::to_string(x.col) + ") where it is undefined");
        sum += Rational(sn.net) * *v;
    }
    return sum;
}

Rational reduce_times(std::span<const TimesFactor> factors) {
    struct Group {
        const TimesFactor* factor;
        long long exponent;
    };
    std::vector<Group> groups;
    for (const auto& f : factors) {
        bool found = false;
        for (auto& g : groups) {
            if (g.factor->identity == f.identity) {
                g.exponent += f.exponent;
                found = true;
                break;
            }
        }
        if (!found) groups.push_back({&f, f.exponent});
    }

    Rational product(1);
    for (const auto& g : groups) {
        if (g.exponent == 0) continue;
        auto v = g.factor->value();
        if (!v)
            throw UndefinedTermForced("factor " + g.factor->identity +
                                      " forced where it is undefined");
        if (v->is_zero() && g.exponent < 0)
            throw DivisionByZero("factor " + g.factor->identity +
                                 " is zero under a negative exponent");
        product *= v->pow(g.exponent);
    }
    return product;
}

namespace {

CurriedFunctionExpr restrict_axis(const HybridFunctionExpr& f, const ParamEnv& env,
                                  long long fixed, bool fix_row) {
    std::vector<CurriedFunctionExpr::Layer> layers;
    layers.reserve(f.layers().size());
    for (const auto& layer : f.layers()) {
        HybridSet<HybridInterval> sliced;
        for (const auto& [rect, coeff] : layer.region.terms()) {
            if (fix_row) {
                long long gate = rect.rows().multiplicity(env, fixed);
                if (gate != 0) sliced.add_term(rect.cols(), coeff * gate);
            } else {
                long long gate = rect.cols().multiplicity(env, fixed);
                if (gate != 0) sliced.add_term(rect.rows(), coeff * gate);
            }
        }
        BlockTerm term = layer.term;
        std::string identity =
            term.identity() + (fix_row ? "|row=" : "|col=") + std::to_string(fixed);
        auto value = [term, env, fixed, fix_row](long long m) -> std::optional<Rational> {
            Point2 p = fix_row ? Point2{fixed, m} : Point2{m, fixed};
            return term.value_at(env, p);
        };
        layers.push_back({std::move(identity), std::move(value), std::move(sliced)});
    }
    return {env, std::move(layers)};
}

} // namespace

CurriedFunctionExpr restrict_row(const HybridFunctionExpr& f, const ParamEnv& env, long long row) {
    return restrict_axis(f, env, row, true);
}

CurriedFunctionExpr restrict_col(const HybridFunctionExpr& f, const ParamEnv& env, long long col) {
    return restrict_axis(f, env, col, false);
}

std::vector<TimesFactor> CurriedFunctionExpr::factors_at(long long m) const {
    std::vector<TimesFactor> factors;
    for (const auto& layer : layers_) {
        long long e = layer.region.multiplicity(env_, m);
        if (e == 0) continue;
        auto value = layer.value;
        factors.push_back({layer.identity, [value, m]() { return value(m); }, e});
    }
    return factors;
}

} // namespace hybridmat

#include "diagcube/chain.hpp"

#include <cmath>
#include <cstdio>
#include <map>

namespace diagcube {

namespace {

const char* anchor_for(const std::string& name) {
    if (name.rfind("lemma1", 0) == 0) return "Lemma 1";
    if (name.rfind("lemma2", 0) == 0) return "Lemma 2";
    if (name.rfind("lemma3", 0) == 0) return "Lemma 3";
    if (name.rfind("lemma4", 0) == 0) return "Lemma 4";
    if (name.rfind("lemma5", 0) == 0) return "Lemma 5";
    if (name.rfind("env.", 0) == 0) return "tower definitions";
    if (name.rfind("roundtrip.", 0) == 0) return "back-substitution formulas";
    if (name.rfind("n5.", 0) == 0) return "five-curve relations";
    if (name.rfind("nonzero.", 0) == 0) return "nonvanishing side conditions";
    if (name.rfind("mutation.", 0) == 0) return "mutation soundness";
    return "chain";
}

std::string point_str(const std::vector<FpElem>& xi) {
    std::string s = "(";
    for (std::size_t i = 0; i < xi.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(xi[i].value());
    }
    return s + ")";
}

std::string sz_line(int degree_bound, const std::vector<std::uint64_t>& primes) {
    double logp = 0.0;
    for (auto p : primes) {
        double frac = static_cast<double>(degree_bound) / static_cast<double>(p - 2);
        if (frac > 1.0) frac = 1.0;
        logp += std::log10(frac);
    }
    char buf[128];
    std::snprintf(buf, sizeof(buf), "schwartz-zippel: degree<=%d, %zu samples, miss-prob<=1e%.1f",
                  degree_bound, primes.size(), logp);
    return buf;
}

using Builder = NamedElems<FpElem> (*)(const ChainEnv<FpElem>&);

// runs a family of residual checks across modular samples and merges
// per-name verdicts deterministically
template <typename BuildFn>
Report run_modular(const VerifyConfig& cfg, BuildFn build, const char* mode = "modular") {
    struct Agg {
        bool refuted = false;
        std::string counterexample;
        unsigned ok = 0;
    };
    std::map<std::string, Agg> agg;
    std::vector<std::uint64_t> primes;
    unsigned env_failures = 0;
    for (unsigned j = 0; j < cfg.samples; ++j) {
        std::uint64_t p = nth_sample_prime(cfg.prime_lo, cfg.prime_hi, cfg.seed, j);
        FpField f = fp_with_omega(p);
        std::mt19937_64 rng(cfg.seed ^ (0x5851f42d4c957f2dull * (j + 1)));
        auto sample = build_modular_env(cfg.n, f, rng, cfg.retry_budget);
        if (!sample) {
            ++env_failures;
            continue;
        }
        primes.push_back(p);
        for (auto& [name, residual] : build(sample->env)) {
            Agg& a = agg[name];
            if (residual.is_zero()) {
                ++a.ok;
            } else if (!a.refuted) {
                a.refuted = true;
                a.counterexample = "counterexample: p=" + std::to_string(p) + " x=" + point_str(sample->xi);
            }
        }
    }
    Report rep;
    for (auto& [name, a] : agg) {
        CheckRecord r;
        r.name = name;
        r.anchor = anchor_for(name);
        r.mode = mode;
        r.seed = cfg.seed;
        if (a.refuted) {
            r.status = "refuted";
            r.witnesses.push_back(a.counterexample);
        } else if (a.ok == 0) {
            r.status = "inconclusive";
            r.witnesses.push_back("no usable specialization within retry budget");
        } else {
            r.status = "verified";
            r.witnesses.push_back("vanishes at " + std::to_string(a.ok) + " independent (prime, point) samples");
            r.witnesses.push_back(sz_line(relation_degree_bound(name), primes));
        }
        rep.add(r);
    }
    if (env_failures > 0) {
        CheckRecord r;
        r.name = "zz.sampling";
        r.anchor = "specialization sampling";
        r.mode = mode;
        r.seed = cfg.seed;
        r.status = env_failures == cfg.samples ? "inconclusive" : "verified";
        r.witnesses.push_back(std::to_string(env_failures) + " prime(s) skipped (denominator retries exhausted)");
        rep.add(r);
    }
    return rep;
}

void append_exact(Report& rep, const NamedElems<ExactCoeff>& elems, std::uint64_t seed) {
    for (const auto& [name, el] : elems) {
        CheckRecord r;
        r.name = name;
        r.anchor = anchor_for(name);
        r.mode = "exact";
        r.seed = seed;
        if (el.is_zero()) {
            r.status = "verified";
            r.witnesses.push_back("zero element of the rank-6^n free module");
        } else {
            r.status = "refuted";
            r.witnesses.push_back("residual has " + std::to_string(el.coeffs().size()) +
                                  " nonzero basis coefficients");
        }
        rep.add(r);
    }
}

} // namespace

// Measured from the exact construction (see chain tests, which recompute
// these values); used only for the Schwartz–Zippel line in reports.
int relation_degree_bound(const std::string& name) {
    struct Entry { const char* prefix; int bound; };
    static const Entry table[] = {
        {"lemma1", 12},   {"lemma2", 24},  {"lemma3", 40},  {"lemma4.bridge", 44},
        {"lemma4", 36},   {"lemma5.cleared", 64}, {"lemma5", 96},
        {"env.", 28},     {"roundtrip.", 96},     {"n5.relation1.cleared", 64},
        {"n5.relation2.cleared", 64},             {"n5.", 96},
        {"nonzero.", 64}, {"mutation.", 128},
    };
    for (const auto& e : table)
        if (name.rfind(e.prefix, 0) == 0) return e.bound;
    return 128;
}

Report verify_lemmas(const VerifyConfig& cfg) {
    if (cfg.exact) {
        Report rep;
        ChainEnv<ExactCoeff> env = build_exact_env(cfg.n);
        append_exact(rep, env_defining_residuals(env), cfg.seed);
        for (int which = 1; which <= 5; ++which)
            append_exact(rep, lemma_residuals(env, which), cfg.seed);
        append_exact(rep, roundtrip_residuals(env), cfg.seed);
        return rep;
    }
    return run_modular(cfg, [](const ChainEnv<FpElem>& e) {
        NamedElems<FpElem> all = env_defining_residuals(e);
        for (int which = 1; which <= 5; ++which)
            for (auto& nr : lemma_residuals(e, which)) all.push_back(std::move(nr));
        for (auto& nr : roundtrip_residuals(e)) all.push_back(std::move(nr));
        return all;
    });
}

Report verify_roundtrip_report(const VerifyConfig& cfg) {
    if (cfg.exact) {
        Report rep;
        ChainEnv<ExactCoeff> env = build_exact_env(cfg.n);
        append_exact(rep, roundtrip_residuals(env), cfg.seed);
        return rep;
    }
    return run_modular(cfg, [](const ChainEnv<FpElem>& e) { return roundtrip_residuals(e); });
}

Report verify_n5_report(const VerifyConfig& cfg) {
    VerifyConfig c5 = cfg;
    c5.n = 5;
    if (cfg.exact) {
        Report rep;
        ChainEnv<ExactCoeff> env = build_exact_env(5);
        append_exact(rep, n5_residuals(env), cfg.seed);
        return rep;
    }
    return run_modular(c5, [](const ChainEnv<FpElem>& e) { return n5_residuals(e); });
}

Report nonzero_conditions_report(const VerifyConfig& cfg) {
    Report rep;
    if (cfg.exact) {
        ChainEnv<ExactCoeff> env = build_exact_env(cfg.n);
        for (const auto& [name, el] : nonzero_condition_elems(env)) {
            NonzeroWitness w = nonzero_witness(el, cfg.seed);
            CheckRecord r;
            r.name = name;
            r.anchor = anchor_for(name);
            r.mode = "exact";
            r.seed = cfg.seed;
            r.status = w.nonzero ? "verified" : "refuted";
            if (w.nonzero) {
                r.witnesses.push_back("nonzero in normal form");
                if (w.witnessed) {
                    std::string pt = "(";
                    for (std::size_t i = 0; i < w.point.size(); ++i)
                        pt += (i ? "," : "") + std::to_string(w.point[i]);
                    pt += ")";
                    r.witnesses.push_back("specialization witness p=" + std::to_string(w.prime) +
                                          " x=" + pt + " " + w.monomial);
                }
            }
            rep.add(r);
        }
        return rep;
    }
    return run_modular(cfg, [](const ChainEnv<FpElem>& e) {
        // in modular mode a condition holds when the element is nonzero,
        // so check the *negation* pattern: record zero residual as failure
        NamedElems<FpElem> out;
        for (auto& [name, el] : nonzero_condition_elems(e)) {
            // represent "el nonzero" as residual zero iff condition holds
            TowerElem<FpElem> residual =
                el.is_zero() ? TowerElem<FpElem>::one(e.alg) : TowerElem<FpElem>(e.alg);
            out.emplace_back(name, std::move(residual));
        }
        return out;
    });
}

Report mutation_report(const VerifyConfig& cfg, unsigned runs) {
    Report rep;
    unsigned refuted = 0;
    for (unsigned run = 0; run < runs; ++run) {
        std::uint64_t p = nth_sample_prime(cfg.prime_lo, cfg.prime_hi, cfg.seed + 101 + run, 0);
        FpField f = fp_with_omega(p);
        std::mt19937_64 rng(cfg.seed ^ (0xa24baed4963ee407ull * (run + 1)));
        auto sample = build_modular_env(cfg.n, f, rng, cfg.retry_budget);
        if (!sample) continue;
        NamedElems<FpElem> rels = cfg.n == 5 ? n5_residuals(sample->env)
                                             : lemma_residuals(sample->env, 5);
        // perturb one relation by a random nonzero basis term
        std::size_t which = draw_u64(rng, rels.size());
        auto& [rel_name, residual] = rels[which];
        std::array<std::uint8_t, 8> exps{};
        for (int i = 0; i < cfg.n; ++i) exps[i] = static_cast<std::uint8_t>(draw_u64(rng, 6));
        FpElem coeff = f.make_u(1 + draw_u64(rng, f.p - 1));
        TowerElem<FpElem> perturbed =
            residual + TowerElem<FpElem>::monomial(sample->env.alg, exps, coeff);
        bool caught = !perturbed.is_zero();
        if (caught) ++refuted;
        CheckRecord r;
        r.name = "mutation." + std::to_string(run < 10 ? 0 : run / 10) + std::to_string(run % 10) +
                 "." + rel_name;
        r.anchor = anchor_for(r.name);
        r.mode = "modular";
        r.seed = cfg.seed;
        r.status = caught ? "verified" : "refuted"; // verified = mutation detected
        r.witnesses.push_back("perturbed " + rel_name + " at p=" + std::to_string(p) + " x=" +
                              point_str(sample->xi) + (caught ? " -> refutation observed" : " -> missed"));
        rep.add(r);
    }
    CheckRecord summary;
    summary.name = "mutation.zz-summary";
    summary.anchor = "mutation soundness";
    summary.mode = "modular";
    summary.seed = cfg.seed;
    summary.status = (refuted * 20 >= runs * 19) ? "verified" : "refuted";
    summary.witnesses.push_back(std::to_string(refuted) + "/" + std::to_string(runs) +
                                " perturbed relations refuted");
    rep.add(summary);
    return rep;
}

} // namespace diagcube

#pragma once

// The staged certification engine: runs Stages 0-8 in order, aggregates a
// Certificate, certifies concrete (p, q) instances, and dumps computed
// objects in the canonical polynomial format.

#include <cstdlib>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "cuboid/report.hpp"
#include "cuboid/stages.hpp"

namespace cuboid {

// CERTIFY_JOBS overrides the hardware default.
inline unsigned default_jobs() {
    if (const char* env = std::getenv("CERTIFY_JOBS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? hc : 1;
}

struct RunConfig {
    std::optional<std::string> cache_dir;
    unsigned jobs = 0;  // 0 -> default_jobs()
    bool keep_going = false;
    std::set<int> stages = {0, 1, 2, 3, 4, 5, 6, 7, 8};
};

class Pipeline {
public:
    Pipeline(GoldenData golden, RunConfig cfg = {}) : g_(std::move(golden)), cfg_(std::move(cfg)) {
        if (cfg_.jobs == 0) cfg_.jobs = default_jobs();
    }

    const GoldenData& golden() const { return g_; }
    const RunConfig& config() const { return cfg_; }

    // Runs the selected stages in order; aborts at the first failure unless
    // keep_going is set. Unselected prerequisite objects are derived on
    // demand (without emitting a report).
    Certificate run() {
        Certificate cert;
        cert.golden_checksums = g_.checksums;
        for (int k = 0; k <= 8; ++k) {
            if (!cfg_.stages.count(k)) continue;
            StageReport rep = run_stage(k);
            bool ok = rep.passed();
            cert.stages.push_back(std::move(rep));
            if (!ok && !cfg_.keep_going) break;
        }
        cert.finalize();
        return cert;
    }

    // Computed objects, derived on demand. Stage 4 honors the disc cache.
    const MPoly& E2() { ensure_E2E3(); return *E2_; }
    const MPoly& E3() { ensure_E2E3(); return *E3_; }
    const MPoly& F() { ensure_F(); return *F_; }
    const MPoly& f() { ensure_f(); return *f_; }
    const UPolyZ& disc() { ensure_disc(); return *disc_; }
    // P6/P28 as consumed by stages 5-7: stage-4 outputs when stage 4 ran,
    // otherwise the (checksummed) golden values.
    const UPolyZ& P6() const { return g_.P6; }
    const UPolyZ& P28() const { return P28_ ? *P28_ : g_.P28; }

private:
    StageReport run_stage(int k) {
        static const char* names[] = {
            "stage0_normalization", "stage1_derive_E2_E3",  "stage2_compute_F",
            "stage3_compute_f",     "stage4_discriminant",  "stage5_rational_roots",
            "stage6_isolation",     "stage7_sample_counts", "stage8_s_equals_one"};
        StageReport rep(names[k]);
        try {
            switch (k) {
                case 0: stage0_normalization(rep); break;
                case 1: {
                    auto out = stage1_derive_E2_E3(g_, rep);
                    E2_ = std::move(out.E2);
                    E3_ = std::move(out.E3);
                    break;
                }
                case 2: ensure_E2E3(); F_ = stage2_compute_F(g_, *E2_, *E3_, rep); break;
                case 3: ensure_F(); f_ = stage3_compute_f(g_, *F_, rep); break;
                case 4: {
                    ensure_f();
                    auto out = stage4_discriminant(g_, *f_, rep, cfg_.jobs, cfg_.cache_dir);
                    disc_ = std::move(out.disc);
                    P28_ = std::move(out.P28);
                    break;
                }
                case 5: stage5_rational_roots(P6(), P28(), rep); break;
                case 6: {
                    ensure_disc();
                    rep.note("disc_source", disc_from_stage4_ ? "stage4" : "golden_reconstruction");
                    stage6_isolation(g_, P6(), P28(), *disc_, rep);
                    break;
                }
                case 7: ensure_f(); stage7_sample_counts(g_, *f_, cfg_.jobs, rep); break;
                case 8: ensure_f(); stage8_s_equals_one(g_, *f_, rep); break;
            }
        } catch (const Error& e) {
            rep.fail("stage_error", e.what());
        }
        return rep;
    }

    void ensure_E2E3() {
        if (E2_) return;
        StageReport scratch("derive");
        auto out = stage1_derive_E2_E3(g_, scratch);
        E2_ = std::move(out.E2);
        E3_ = std::move(out.E3);
    }
    void ensure_F() {
        if (F_) return;
        ensure_E2E3();
        StageReport scratch("derive");
        F_ = stage2_compute_F(g_, *E2_, *E3_, scratch);
    }
    void ensure_f() {
        if (f_) return;
        ensure_F();
        StageReport scratch("derive");
        f_ = stage3_compute_f(g_, *F_, scratch);
    }
    void ensure_disc() {
        if (disc_) return;
        if (cfg_.stages.count(4)) {
            ensure_f();
            StageReport scratch("derive");
            auto out = stage4_discriminant(g_, *f_, scratch, cfg_.jobs, cfg_.cache_dir);
            disc_ = std::move(out.disc);
            P28_ = std::move(out.P28);
        } else {
            // stage 4 not selected: use the certified factored form
            disc_ = reconstruct_disc(g_);
            disc_from_stage4_ = false;
        }
    }

    GoldenData g_;
    RunConfig cfg_;
    std::optional<MPoly> E2_, E3_, F_, f_;
    std::optional<UPolyZ> disc_;
    std::optional<UPolyZ> P28_;
    bool disc_from_stage4_ = true;
};

// ---------------------------------------------------------------------------
// Instance certification

// A concrete parameter pair: coprime positive integers with p != q.
struct CuboidInstance {
    Int p, q;

    CuboidInstance(Int p_, Int q_) : p(std::move(p_)), q(std::move(q_)) {
        if (p.sign() <= 0 || q.sign() <= 0)
            throw InvalidInstance("p and q must be positive");
        if (p == q) throw InvalidInstance("p = q is excluded");
        if (!gcd(p, q).is_one()) throw InvalidInstance("p and q must be coprime");
    }
};

// Certifies that Q_{p,q} admits no quintic 5+5 splitting, by evaluating the
// certified obstruction at s0 = (p/q)^2: the discriminant does not vanish
// there and f(s0, y) has no real roots. `disc` may be passed in to avoid
// rebuilding the factored discriminant per call.
inline StageReport instance_check(const GoldenData& g, const CuboidInstance& inst,
                                  const UPolyZ* disc = nullptr) {
    StageReport rep("instance_p=" + inst.p.str() + "_q=" + inst.q.str());
    StageTimer timer(rep);
    Rat s0(inst.p * inst.p, inst.q * inst.q);
    rep.note("s0", s0.str());
    rep.check_true("s0_positive", s0.sign() > 0);
    rep.check_true("s0_not_one", !(s0 == Rat(1)));

    UPolyZ local;
    if (!disc) {
        local = reconstruct_disc(g);
        disc = &local;
    }
    rep.check_true("P6(s0)_nonzero", eval_sign(g.P6, s0) != 0);
    rep.check_true("P28(s0)_nonzero", eval_sign(g.P28, s0) != 0);
    rep.check_true("disc(s0)_nonzero", eval_sign(*disc, s0) != 0);

    std::vector<Rat> coeffs;
    for (std::size_t k = 0; k <= 16; ++k)
        coeffs.push_back(eval(to_univariate(coeff_in(g.f, "y", k), "s"), s0));
    UPolyQ fs0(std::move(coeffs), "y");
    rep.check("f(s0)_degree", "16",
              fs0.is_zero() ? "-inf" : std::to_string(fs0.deg()));
    std::size_t count = count_real_roots(fs0, ExtendedPoint::minus_infinity(),
                                         ExtendedPoint::plus_infinity());
    rep.check("f(s0)_real_roots", "0", std::to_string(count));
    rep.note("verdict", rep.passed() ? "no quintic 5+5 splitting of Q_{p,q}"
                                     : "certificate does not apply");
    return rep;
}

// ---------------------------------------------------------------------------
// Object dump (canonical polynomial file format)

inline nlohmann::ordered_json dump_object(Pipeline& pipe, const std::string& name) {
    if (name == "E2") return to_json(pipe.E2());
    if (name == "E3") return to_json(pipe.E3());
    if (name == "F") return to_json(pipe.F());
    if (name == "f") return to_json(pipe.f());
    if (name == "disc") return to_json(pipe.disc());
    if (name == "P6") return to_json(pipe.P6());
    if (name == "P28") return to_json(pipe.P28());
    throw DataError("unknown object: " + name +
                    " (expected E2|E3|F|f|disc|P6|P28)");
}

}  // namespace cuboid

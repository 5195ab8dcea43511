// Copyright 2026 The qduplex Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "qduplex/capacity.hpp"
#include "qduplex/experiment.hpp"
#include "qduplex/protocol.hpp"
#include "qduplex/report.hpp"
#include "qduplex/simulation.hpp"

namespace qduplex {

namespace {

struct Checker {
    std::ostream& out;
    int failures = 0;

    void check(const std::string& name, bool ok, const std::string& detail = "") {
        out << (ok ? "[ok]   " : "[FAIL] ") << name;
        if (!ok && !detail.empty()) out << "  (" << detail << ")";
        out << "\n";
        if (!ok) ++failures;
    }
};

PureState random_state(int qubits, RandomStream& rng) {
    const int dim = 1 << qubits;
    std::vector<Complex> a(static_cast<std::size_t>(dim));
    double norm2 = 0.0;
    for (auto& amp : a) {
        amp = Complex(rng.gaussian(), rng.gaussian());
        norm2 += std::norm(amp);
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& amp : a) amp *= inv;
    return PureState(std::move(a), qubits);
}

double matrix_norm_to_identity(const ComplexMatrix& m) {
    return m.max_abs_diff(ComplexMatrix::identity(m.dim()));
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::string fmt(double v) {
    std::ostringstream ss;
    ss.precision(12);
    ss << v;
    return ss.str();
}

}  // namespace

int run_verification(std::ostream& out, std::uint64_t seed) {
    Checker c{out};
    auto stream_for = [&](std::uint64_t idx) {
        return RandomStream(RandomStream::derive_seed(seed, idx));
    };

    {  // Unitarity of the channel unitary over a wide parameter range.
        RandomStream rng = stream_for(101);
        double worst = 0.0;
        for (int i = 0; i < 10000; ++i) {
            ChannelParam p = sample_channel_param(rng);
            double lambda = 20.0 * rng.uniform01();
            UnitaryOperator u = pauli_exponential(p.c, lambda);
            worst = std::max(worst, matrix_norm_to_identity(u.matrix() * u.matrix().adjoint()));
        }
        c.check("channel unitary is unitary (1e4 draws)", worst < kStructuralTol, fmt(worst));
    }

    {  // Same-axis composition of the exponential.
        RandomStream rng = stream_for(102);
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            ChannelParam p = sample_channel_param(rng);
            double l1 = 5.0 * rng.uniform01(), l2 = 5.0 * rng.uniform01();
            ComplexMatrix lhs =
                (pauli_exponential(p.c, l1) * pauli_exponential(p.c, l2)).matrix();
            worst = std::max(worst, lhs.max_abs_diff(pauli_exponential(p.c, l1 + l2).matrix()));
        }
        c.check("same-axis exponential composition", worst < kNumericTol, fmt(worst));
    }

    {  // Normalization preserved by channel application.
        RandomStream rng = stream_for(103);
        NoisyChannelConfig cfg{3.0};
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            PureState s = random_state(1, rng);
            TransmissionResult r = noisy_transmit(s, cfg, rng);
            double n = 0.0;
            for (const Complex& amp : r.output_state.amplitudes()) n += std::norm(amp);
            worst = std::max(worst, std::abs(n - 1.0));
        }
        c.check("noisy transmission preserves normalization", worst < kStructuralTol, fmt(worst));
    }

    {  // Bell probability completeness on random states.
        RandomStream rng = stream_for(104);
        double worst = 0.0, low = 0.0;
        for (int i = 0; i < 200; ++i) {
            std::array<double, 4> p = bell_probabilities(random_state(2, rng));
            double sum = p[0] + p[1] + p[2] + p[3];
            worst = std::max(worst, std::abs(sum - 1.0));
            for (double v : p) low = std::min(low, v);
        }
        c.check("bell probabilities sum to one", worst < kStructuralTol, fmt(worst));
        c.check("bell probabilities nonnegative", low > -1e-12, fmt(low));
    }

    {  // Entropy bounds.
        RandomStream rng = stream_for(105);
        bool ok = true;
        std::string detail;
        for (int i = 0; i < 50 && ok; ++i) {
            DensityOperator pure = DensityOperator::from_pure(random_state(2, rng));
            double sp = von_neumann_entropy(pure);
            DensityOperator mix =
                pure.mixed_with(DensityOperator::from_pure(random_state(2, rng)), 0.5 + 0.4 * rng.uniform01());
            double sm = von_neumann_entropy(mix);
            if (sp < -1e-12 || sp > 1e-8) { ok = false; detail = "pure entropy " + fmt(sp); }
            if (sm < -1e-12 || sm > 2.0 + 1e-9) { ok = false; detail = "mixed entropy " + fmt(sm); }
        }
        c.check("entropy bounds on pure and mixed states", ok, detail);
        double s1 = von_neumann_entropy(DensityOperator::maximally_mixed(1));
        double s2 = von_neumann_entropy(DensityOperator::maximally_mixed(2));
        c.check("maximally mixed entropies are 1 and 2 bits",
                std::abs(s1 - 1.0) < 1e-12 && std::abs(s2 - 2.0) < 1e-12,
                fmt(s1) + ", " + fmt(s2));
    }

    {  // Partial trace: trace preservation and linearity.
        RandomStream rng = stream_for(106);
        double worst_tr = 0.0, worst_lin = 0.0;
        for (int i = 0; i < 50; ++i) {
            DensityOperator r1 = DensityOperator::from_pure(random_state(2, rng));
            DensityOperator r2 = DensityOperator::from_pure(random_state(2, rng));
            double w = rng.uniform01();
            DensityOperator mix = r1.mixed_with(r2, w);
            for (int keep = 1; keep <= 2; ++keep) {
                DensityOperator t = partial_trace(mix, keep);
                worst_tr = std::max(worst_tr, std::abs(t.matrix().trace().real() - 1.0));
                ComplexMatrix lin = partial_trace(r1, keep).matrix().scaled(Complex(w, 0.0)) +
                                    partial_trace(r2, keep).matrix().scaled(Complex(1.0 - w, 0.0));
                worst_lin = std::max(worst_lin, t.matrix().max_abs_diff(lin));
            }
        }
        c.check("partial trace preserves trace", worst_tr < kStructuralTol, fmt(worst_tr));
        c.check("partial trace is linear", worst_lin < kStructuralTol, fmt(worst_lin));
    }

    {  // Singlet is a total-spin null vector.
        TotalSpinOperator s = TotalSpinOperator::make();
        PureState singlet = make_singlet();
        double worst = 0.0;
        for (const ComplexMatrix* m : {&s.s_x, &s.s_y, &s.s_z}) {
            double n2 = 0.0;
            for (int r = 0; r < 4; ++r) {
                Complex acc(0.0, 0.0);
                for (int k = 0; k < 4; ++k) acc += m->at(r, k) * singlet.amp(k);
                n2 += std::norm(acc);
            }
            worst = std::max(worst, std::sqrt(n2));
        }
        c.check("singlet total spin is zero", worst < 1e-12, fmt(worst));
    }

    {  // The undo identity across the parameter range.
        RandomStream rng = stream_for(107);
        double worst = 1.0;
        for (int i = 0; i < 10000; ++i) {
            ChannelParam p = sample_channel_param(rng);
            double lambda = 20.0 * rng.uniform01();
            worst = std::min(worst, verify_undo_identity(p, lambda));
        }
        c.check("undo restores the singlet (1e4 draws)", worst >= 1.0 - kNumericTol, fmt(worst));
    }

    {  // Undo operator has the same closed form as the channel unitary.
        RandomStream rng = stream_for(108);
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            ChannelParam p = sample_channel_param(rng);
            double lambda = 10.0 * rng.uniform01();
            worst = std::max(worst, undo_operator(p, lambda).matrix().max_abs_diff(
                                        pauli_exponential(p.c, lambda).matrix()));
        }
        c.check("undo operator equals channel closed form", worst == 0.0, fmt(worst));
    }

    {  // Superdense codec round trip, deterministically.
        RandomStream rng = stream_for(109);
        bool ok = true;
        for (int b1 = 0; b1 < 2 && ok; ++b1) {
            for (int b2 = 0; b2 < 2 && ok; ++b2) {
                BellMessage m{b1, b2};
                PureState enc = superdense_encode(m, make_singlet());
                auto [outcome, prob] = measure_bell_basis(enc, rng);
                ok = bell_outcome_to_message(outcome) == m && prob > 1.0 - 1e-12;
            }
        }
        c.check("superdense codec bijective with certainty", ok);
    }

    {  // Gaussian sampler moments and independence.
        RandomStream rng = stream_for(110);
        const int n = 100000;
        double sx = 0, sy = 0, sz = 0, sxx = 0, syy = 0, szz = 0, sxy = 0;
        double prev_x = 0.0, lag = 0.0;
        for (int i = 0; i < n; ++i) {
            ChannelParam p = sample_channel_param(rng);
            sx += p.c[0]; sy += p.c[1]; sz += p.c[2];
            sxx += p.c[0] * p.c[0]; syy += p.c[1] * p.c[1]; szz += p.c[2] * p.c[2];
            sxy += p.c[0] * p.c[1];
            if (i > 0) lag += prev_x * p.c[0];
            prev_x = p.c[0];
        }
        double mx = sx / n, my = sy / n, mz = sz / n;
        double vx = sxx / n - mx * mx, vy = syy / n - my * my, vz = szz / n - mz * mz;
        double cxy = sxy / n - mx * my;
        double lag1 = lag / (n - 1);
        bool means_ok = std::abs(mx) < 0.015 && std::abs(my) < 0.015 && std::abs(mz) < 0.015;
        bool vars_ok = std::abs(vx - 1.0) < 0.02 && std::abs(vy - 1.0) < 0.02 && std::abs(vz - 1.0) < 0.02;
        c.check("channel parameter means are zero", means_ok,
                fmt(mx) + ", " + fmt(my) + ", " + fmt(mz));
        c.check("channel parameter variances are one", vars_ok,
                fmt(vx) + ", " + fmt(vy) + ", " + fmt(vz));
        c.check("components and consecutive draws uncorrelated",
                std::abs(cxy) < 0.015 && std::abs(lag1) < 0.015, fmt(cxy) + ", " + fmt(lag1));
    }

    {  // Feedback quantization basics.
        FeedbackLinkConfig ideal{0, 5.0};
        ChannelParam p{{1.25, -0.3, 4.9}};
        ChannelParam q = quantize_feedback(p, ideal);
        bool identity_ok = q.c == p.c;
        FeedbackLinkConfig one_bit{1, 5.0};
        ChannelParam clamped = quantize_feedback(ChannelParam{{6.0, 0.0, -7.0}}, one_bit);
        bool clamp_ok = clamped.c[0] == 5.0 && clamped.c[2] == -5.0;
        c.check("feedback quantization identity and clamping", identity_ok && clamp_ok);
    }

    {  // Pipeline determinism, causality and the throughput formula.
        NoisyChannelConfig cfg{7.0};
        FeedbackLinkConfig fb;
        auto run_once = [&]() {
            RandomStream msgs = stream_for(111);
            RandomStream phys = stream_for(112);
            return run_pipeline(100, cfg, fb, true, msgs, phys, seed);
        };
        TrialLog a = run_once();
        TrialLog b = run_once();
        bool same = a.bits_sent == b.bits_sent &&
                    a.bits_decoded_correctly == b.bits_decoded_correctly &&
                    a.deliveries.size() == b.deliveries.size();
        for (std::size_t i = 0; same && i < a.deliveries.size(); ++i) {
            same = a.deliveries[i].message == b.deliveries[i].message &&
                   a.deliveries[i].decoded == b.deliveries[i].decoded;
        }
        c.check("pipeline is deterministic under a fixed seed", same);

        bool causal = true;
        for (const PipelinePairRecord& r : a.pair_records) {
            if (!(r.noisy_slot < r.quiet_slot)) causal = false;
        }
        c.check("pipeline undo never precedes its parameter", causal);
        c.check("pipeline decodes 2(n-1) bits with ideal feedback",
                a.bits_sent == 198 && a.bits_decoded_correctly == 198,
                fmt(static_cast<double>(a.bits_decoded_correctly)));

        RandomStream msgs = stream_for(113);
        RandomStream phys = stream_for(114);
        TrialLog off = run_pipeline(100, cfg, fb, false, msgs, phys, seed);
        c.check("pipeline without feedback delivers exactly one bit per slot",
                off.bits_decoded_correctly == 100 && off.bits_sent == 100);
    }

    {  // Classical baseline edge cases.
        RandomStream rng1 = stream_for(115);
        BaselineLog off = run_classical_baseline(false, 1000, 0.5, rng1);
        RandomStream rng2 = stream_for(116);
        BaselineLog clean = run_classical_baseline(true, 1000, 0.0, rng2);
        c.check("baseline without feedback is exactly one bit per slot",
                off.novel_bits == 1000);
        c.check("baseline with clean channels is exactly two bits per slot",
                clean.novel_bits == 2000);
    }

    {  // Helper-round flip inference.
        RandomStream rng = stream_for(117);
        FlipChannelConfig flip;
        bool ok = true;
        for (int i = 0; i < 1000 && ok; ++i) {
            HelperFeedbackResult r = helper_feedback_round(flip, i & 1, rng);
            ok = r.inferred_flip == r.true_flip;
        }
        c.check("transmitter infers every flip from helper feedback", ok);
    }

    {  // Byte-level report reproducibility and format equivalence.
        namespace fs = std::filesystem;
        std::vector<ReportRow> rows;
        ReportRow r1, r2;
        r1.add("slot", 1).add("value", 1.998).add("tag", "fresh").add("flag", true);
        r2.add("slot", 2).add("value", -0.25).add("tag", "repair").add("flag", false);
        rows.push_back(r1);
        rows.push_back(r2);

        fs::path base = fs::temp_directory_path();
        fs::path csv1 = base / "qduplex_verify_1.csv", csv2 = base / "qduplex_verify_2.csv";
        fs::path json1 = base / "qduplex_verify_1.json";
        emit_report(rows, csv1.string(), "csv");
        emit_report(rows, csv2.string(), "csv");
        emit_report(rows, json1.string(), "json");
        std::string a = read_file(csv1), b = read_file(csv2), j = read_file(json1);
        bool repeat_ok = !a.empty() && a == b;
        bool equiv_ok = j.find("1.998") != std::string::npos &&
                        j.find("-0.25") != std::string::npos && a.find("1.998") != std::string::npos;
        std::error_code ec;
        fs::remove(csv1, ec); fs::remove(csv2, ec); fs::remove(json1, ec);
        c.check("reports are byte-identical across reruns", repeat_ok);
        c.check("csv and json carry the same value text", equiv_ok);
    }

    {  // Information metric sanity.
        Ensemble e;
        e.entries.emplace_back(0.5, DensityOperator::from_pure(PureState::basis(1, 0)));
        e.entries.emplace_back(0.5, DensityOperator::from_pure(PureState::basis(1, 1)));
        double chi = holevo_quantity(e);
        Ensemble same;
        same.entries.emplace_back(0.5, DensityOperator::maximally_mixed(1));
        same.entries.emplace_back(0.5, DensityOperator::maximally_mixed(1));
        double chi0 = holevo_quantity(same);
        c.check("holevo quantity: orthogonal pure ensemble gives one bit",
                std::abs(chi - 1.0) < 1e-12 && chi0 < 1e-12, fmt(chi) + ", " + fmt(chi0));

        JointCounts diag{{{5000, 0}, {0, 5000}}};
        JointCounts flat{{{2500, 2500}, {2500, 2500}}};
        double mi1 = empirical_mutual_information(diag);
        double mi0 = empirical_mutual_information(flat);
        c.check("plug-in mutual information: diagonal one bit, product zero",
                std::abs(mi1 - 1.0) < 1e-12 && mi0 < 1e-12, fmt(mi1) + ", " + fmt(mi0));
    }

    return c.failures;
}

}  // namespace qduplex

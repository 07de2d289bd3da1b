#include "heunalg/cli/sampler.hpp"

namespace heunalg::cli {

namespace {

std::mt19937_64 seeded(std::uint64_t seed, std::uint32_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), stream};
    return std::mt19937_64(seq);
}

}  // namespace

Sampler::Sampler(const SamplingConfig& cfg, std::uint32_t stream) : cfg_(cfg), rng_(seeded(cfg.seed, stream)) {}

int Sampler::integer(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(rng_() % span);
}

Rational Sampler::rational() {
    const int num = integer(-cfg_.numerator_bound, cfg_.numerator_bound);
    const int den = integer(1, cfg_.denominator_bound);
    return Rational(num, den);
}

Rational Sampler::nonzero_rational() {
    for (int i = 0; i < max_attempts; ++i) {
        Rational r = rational();
        if (!r.is_zero()) return r;
    }
    throw SamplingError("no nonzero rational after " + std::to_string(max_attempts) + " draws");
}

int Sampler::grid_size(int parity) {
    std::vector<int> options;
    for (int n = cfg_.n_min; n <= cfg_.n_max; ++n)
        if (parity < 0 || n % 2 == parity) options.push_back(n);
    if (options.empty())
        throw SamplingError("no N in [" + std::to_string(cfg_.n_min) + ", " + std::to_string(cfg_.n_max) +
                            "] with the required parity");
    return options[static_cast<std::size_t>(integer(0, static_cast<int>(options.size()) - 1))];
}

RacahParams Sampler::racah(RacahTruncation t) {
    std::string last;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        RacahParams p;
        p.N = grid_size(-1);
        p.truncation = t;
        p.alpha = rational();
        p.beta = rational();
        p.gamma = rational();
        p.delta = rational();
        const Rational end(-p.N - 1);
        switch (t) {
            case RacahTruncation::alpha: p.alpha = end; break;
            case RacahTruncation::beta_delta: p.beta = end - p.delta; break;
            case RacahTruncation::gamma: p.gamma = end; break;
        }
        try {
            validate(p);
        } catch (const std::exception& e) {
            last = e.what();
            continue;
        }
        const auto B = racah_B(p);
        const auto D = racah_D(p);
        bool irreducible = true;
        for (int x = 0; x < p.N; ++x) irreducible = irreducible && !B[static_cast<std::size_t>(x)].is_zero();
        for (int x = 1; x <= p.N; ++x) irreducible = irreducible && !D[static_cast<std::size_t>(x)].is_zero();
        if (!irreducible) {
            last = "off-diagonal coefficient of the Racah operator vanishes inside the grid";
            continue;
        }
        return p;
    }
    throw SamplingError("Racah sampler (" + to_string(t) + ") rejected " + std::to_string(max_attempts) +
                        " draws; last reason: " + last);
}

BIParams Sampler::bi(BICase kind) {
    std::string last;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        BIParams p;
        p.spec.kind = kind;
        p.N = grid_size(kind == BICase::even ? 0 : 1);
        p.rho1 = rational();
        p.rho2 = rational();
        p.r1 = rational();
        p.r2 = rational();
        if (kind == BICase::odd_rho) p.rho1 = Rational(-p.N - 1, 2) - p.rho2;
        if (kind == BICase::odd_r) p.r2 = Rational(p.N + 1, 2) - p.r1;
        if (kind == BICase::even) {
            // One closing combination must build for the draw to be useful.
            bool any = false;
            for (const BICaseSpec& spec : even_case_specs()) {
                try {
                    bi_realization(even_case_params(p, spec));
                    any = true;
                    break;
                } catch (const std::exception& e) {
                    last = e.what();
                }
            }
            if (any) return p;
            continue;
        }
        try {
            bi_realization(p);
            return p;
        } catch (const std::exception& e) {
            last = e.what();
        }
    }
    throw SamplingError("Bannai-Ito sampler rejected " + std::to_string(max_attempts) + " draws; last reason: " + last);
}

TauParams Sampler::tau() { return {rational(), rational(), rational(), rational(), rational()}; }

std::vector<TauParams> Sampler::taus(int count) {
    std::vector<TauParams> out;
    for (int i = 0; i < count; ++i) {
        TauParams t = tau();
        if (i == 0) t.tau2 = -t.tau1;
        if (i == 1) t.tau2 = t.tau1;
        out.push_back(t);
    }
    return out;
}

HeunRacahParams Sampler::heun_racah_free() {
    HeunRacahParams p;
    p.t0 = rational();
    p.t1 = rational();
    p.u0 = rational();
    p.u1 = rational();
    p.u2 = rational();
    p.v2 = rational();
    p.v3 = rational();
    return p;
}

HBIParams Sampler::hbi_free() {
    HBIParams p;
    Rational* fields[] = {&p.p1_0, &p.p1_1, &p.p2_0, &p.p2_1, &p.p2_2, &p.p3_0, &p.p3_1, &p.p3_2, &p.p3_3};
    for (Rational* f : fields) *f = rational();
    return p;
}

}  // namespace heunalg::cli

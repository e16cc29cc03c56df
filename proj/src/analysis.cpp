#include "analysis.hpp"

#include "e8.hpp"
#include "errors.hpp"
#include "rng.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <mutex>
#include <sstream>
#include <thread>

namespace euclid8 {

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

Vec8Z random_coords(Rng& rng, int bits) {
    Vec8Z v;
    for (int i = 0; i < kDim; ++i) v[i] = rng.coordinate(bits);
    return v;
}

RingElement random_nonzero(const FieldData& f, Rng& rng, int bits) {
    for (;;) {
        Vec8Z v = random_coords(rng, bits);
        if (!v.is_zero()) return RingElement{f.id, v};
    }
}

// worker fan-out over [0, count) with per-sample streams, merged by max
template <typename Fn>
void for_each_sample(long count, int threads, Fn&& fn) {
    threads = std::max(1, threads);
    if (threads == 1) {
        for (long k = 0; k < count; ++k) fn(k);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    std::mutex mu;
    std::exception_ptr first_error;
    for (int w = 0; w < threads; ++w)
        pool.emplace_back([&, w] {
            try {
                for (long k = w; k < count; k += threads) fn(k);
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (!first_error) first_error = std::current_exception();
            }
        });
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

} // namespace

TableRow verify_table(const FieldData& f) {
    TableRow row;
    row.field = f.id;
    row.bound = f.lemma_bound();
    row.sup_value = f.norm_sup_voronoi;
    row.maximizer_P = f.sup_maximizer_P;
    row.euclidean_minimum = f.euclidean_minimum;

    Rational n = abs(norm_P(f, f.sup_maximizer_P));
    if (n != f.norm_sup_voronoi)
        fail(errkind::verification_failed,
             std::string("norm of the maximizer is ") + to_string(n) + ", table claims " +
                 to_string(f.norm_sup_voronoi));

    Vec8Q x_std = f.embedding_S * to_B(f, f.sup_maximizer_P);
    if (!in_voronoi(x_std, f.roots_std))
        fail(errkind::verification_failed, "maximizer lies outside the closed Voronoi region");

    if (f.id == FieldId::zeta15) {
        if (!(row.sup_value < row.bound))
            fail(errkind::verification_failed, "zeta15 sup should be strictly below the bound");
    } else if (row.sup_value != row.bound) {
        fail(errkind::verification_failed, "sup should attain the bound for this field");
    }
    return row;
}

StatsReport sample_remainder_ratios(const FieldData& f, long count, int coord_bits,
                                    std::uint64_t seed, int threads) {
    if (count < 1)
        fail(errkind::bad_request, "sample count must be at least 1");
    auto t0 = clock_type::now();

    std::mutex mu;
    Rational max_ratio(0);
    Rational sum_ratio(0);
    const Rational bound = f.lemma_bound();

    for_each_sample(count, threads, [&](long k) {
        Rng rng(seed, static_cast<std::uint64_t>(k));
        RingElement a{f.id, random_coords(rng, coord_bits)};
        RingElement b = random_nonzero(f, rng, coord_bits);
        DivisionResult d = divide(f, a, b);
        if (d.norm_ratio > bound)
            fail(errkind::verification_failed, "sampled ratio exceeds disc_K/4096");
        if (d.norm_ratio > f.norm_sup_voronoi)
            fail(errkind::verification_failed, "sampled ratio exceeds the Voronoi sup");
        std::lock_guard<std::mutex> lock(mu);
        if (d.norm_ratio > max_ratio) max_ratio = d.norm_ratio;
        sum_ratio += d.norm_ratio;
    });

    StatsReport rep;
    rep.field = f.id;
    rep.sample_count = count;
    rep.max_ratio = max_ratio;
    rep.mean_ratio = Rational(sum_ratio / Rational(count)).get_d();
    rep.seed = seed;
    rep.elapsed_seconds = seconds_since(t0);
    return rep;
}

namespace {

// |N(x - cv(x))| for one sample point given by B-coordinates.
Rational af_sample_value(const FieldData& f, const Vec8Q& x_b) {
    Vec8Q x_std = f.embedding_S * x_b;
    if (in_voronoi(x_std, f.roots_std)) {
        // already at most one lattice point away from 0 everywhere: |N(x)|
        // is the limit of |N(t x - cv(t x))| as t -> 1 from inside
        return abs(norm_P(f, from_B(f, x_b)));
    }
    Vec8Q y = decode_e8(x_std);
    Vec8Q q_b = f.embedding_S_inv * y;
    return abs(norm_P(f, from_B(f, x_b - q_b)));
}

} // namespace

Rational estimate_af(const FieldData& f, long count, std::uint64_t seed, int threads) {
    if (count < 1)
        fail(errkind::bad_request, "sample count must be at least 1");
    const Rational bound = f.lemma_bound();
    std::mutex mu;
    Rational best(0);

    const int bits = 12;  // small coordinates keep the decoder exact and fast
    for_each_sample(count, threads, [&](long k) {
        Rational value;
        if (k == 0) {
            value = af_sample_value(f, to_B(f, f.sup_maximizer_P));
        } else {
            Rng rng(seed, static_cast<std::uint64_t>(k));
            Vec8Q x;
            for (int i = 0; i < kDim; ++i) {
                Integer num = rng.coordinate(bits);
                Integer den = rng.denominator(bits);
                Rational c(num, den);
                c.canonicalize();
                x[i] = c;
            }
            value = af_sample_value(f, x);
        }
        if (value > bound)
            fail(errkind::verification_failed, "A_F sample exceeds disc_K/4096");
        std::lock_guard<std::mutex> lock(mu);
        if (value > best) best = value;
    });
    return best;
}

std::vector<BenchPoint> bench_divide(const FieldData& f, const std::vector<long>& bit_sizes,
                                     int reps, std::uint64_t seed) {
    if (reps < 1)
        fail(errkind::bad_request, "bench needs at least one repetition");
    std::vector<long> sizes = bit_sizes;
    std::sort(sizes.begin(), sizes.end());
    sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());

    std::vector<BenchPoint> rows;
    std::uint64_t stream = 0;
    for (long bits : sizes) {
        if (bits < 1)
            fail(errkind::bad_request, "bit size must be positive");
        // one untimed warm-up division per size
        for (int rep = -1; rep < reps; ++rep) {
            Rng rng(seed, stream++);
            RingElement a{f.id, random_coords(rng, static_cast<int>(bits))};
            RingElement b = random_nonzero(f, rng, static_cast<int>(bits));
            if (rep < 0) {
                (void)divide(f, a, b);
                rows.push_back({bits, 0.0});
                continue;
            }
            auto t0 = clock_type::now();
            (void)divide(f, a, b);
            rows.back().mean_seconds += seconds_since(t0);
        }
        rows.back().mean_seconds /= reps;
    }
    return rows;
}

std::string bench_to_csv(const std::vector<BenchPoint>& rows) {
    std::ostringstream out;
    out << "bits,mean_seconds\n";
    for (const auto& row : rows) {
        out << row.bits << ',';
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.9g", row.mean_seconds);
        out << buf << '\n';
    }
    return out.str();
}

} // namespace euclid8

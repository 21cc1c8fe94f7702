// Serial vs parallel timing for the three OpenMP kernels. Each round also
// cross-checks that the parallel result matches the serial one, so the bench
// doubles as an agreement harness. Wall times on a single-core host will show
// no speedup; the point there is overhead visibility.

#include "ramsey/engine.hpp"
#include "ramsey/oracle.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

using namespace ramsey;

namespace {

double now_s() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

template <typename F>
double timed(F&& f) {
    double t0 = now_s();
    f();
    return now_s() - t0;
}

void report(const std::string& name, double serial, double parallel, bool agree) {
    std::cout << name << ": serial " << serial << "s, parallel " << parallel << "s, speedup "
              << (parallel > 0 ? serial / parallel : 0.0) << "x, agree="
              << (agree ? "yes" : "NO") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    int jobs = 4;
    if (const char* env = std::getenv("RAMSEY_JOBS")) jobs = std::atoi(env);
    if (argc > 1) jobs = std::atoi(argv[1]);
    if (jobs < 1) jobs = 1;
    std::cout << "parallel jobs: " << jobs << "\n";

    {
        SearchConfig cfg;
        cfg.cycle_cap = 8;
        cfg.target = Rational(3, 4);
        cfg.start_pred = EndpointPredicate::parse("not-rrr-rrb");
        cfg.end_pred = EndpointPredicate::parse("not-rrr-rrb");
        cfg.max_depth = 21;
        SearchOutcome serial_out, par_out;
        double ts = timed([&] { serial_out = segment_search_serial(cfg); });
        SearchOptions opts;
        opts.jobs = jobs;
        double tp = timed([&] { par_out = segment_search(cfg, opts); });
        report("segment_search (3/4 ladder rung)", ts, tp,
               serial_out.status == par_out.status &&
                   serial_out.transcript == par_out.transcript);
    }

    {
        SearchConfig cfg;
        cfg.cycle_cap = 5;
        cfg.target = Rational(1, 3);
        cfg.start_pred = EndpointPredicate::parse("not-rrr");
        cfg.end_pred = EndpointPredicate::parse("not-rrr");
        cfg.max_depth = 7;
        LemmaVerdict vs, vp;
        double ts = timed([&] { vs = lemma_oracle(cfg, 7, 1); });
        double tp = timed([&] { vp = lemma_oracle(cfg, 7, jobs); });
        report("lemma_oracle (window 7, 2^21 colorings)", ts, tp,
               vs.holds == vp.holds && vs.colorings == vp.colorings);
    }

    {
        SmallGraph g(gen_random_mindeg3(22, 44, 11));
        LongestPathOptions serial_opts, par_opts;
        par_opts.jobs = jobs;
        int ls = 0, lp = 0;
        double ts = timed([&] { ls = longest_path_exact(g, serial_opts); });
        double tp = timed([&] { lp = longest_path_exact(g, par_opts); });
        report("longest_path subset DP (n=22)", ts, tp, ls == lp);
    }

    return 0;
}

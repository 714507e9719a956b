// Times the OpenMP decomposition kernels against the serial reference on
// seeded instances and checks that both give identical results.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <vector>

#include "CLI11.hpp"
#include "ortho/orthogonality.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

bool same_components(const std::optional<std::vector<ortho::Component>>& a,
                     const std::optional<std::vector<ortho::Component>>& b) {
    if (a.has_value() != b.has_value()) return false;
    if (!a) return true;
    if (a->size() != b->size()) return false;
    for (size_t i = 0; i < a->size(); ++i)
        if ((*a)[i].kind != (*b)[i].kind || (*a)[i].coords != (*b)[i].coords ||
            (*a)[i].block != (*b)[i].block)
            return false;
    return true;
}

struct Case {
    const char* name;
    ortho::LinearCode code;
};

}  // namespace

int main(int argc, char** argv) {
    int q = 3;
    int n = 24;
    int threads = 4;
    int reps = 3;
    CLI::App app{"benchmark: serial reference vs OpenMP decomposition scans"};
    app.add_option("--q", q, "field size")->check(CLI::IsMember({2, 3}));
    app.add_option("--n", n, "dimension")->check(CLI::PositiveNumber);
    app.add_option("--threads", threads, "OpenMP thread count")->check(CLI::PositiveNumber);
    app.add_option("--reps", reps, "repetitions per case")->check(CLI::PositiveNumber);
    CLI11_PARSE(app, argc, argv);

    if (const char* env = std::getenv("ORTHO_LATTICE_THREADS")) threads = std::atoi(env);

    std::vector<Case> cases;
    {
        // orthogonal: the scan stops at the first hit; random code: the scan
        // usually runs to exhaustion, which is the worst case
        auto orth = ortho::gen_instance(q, n, 1, ortho::InstanceKind::Orthogonal);
        cases.push_back({"orthogonal", ortho::basis_to_code(ortho::validate(orth, q))});
        auto code = ortho::gen_instance(q, n, 2, ortho::InstanceKind::RandomCode, n / 2);
        cases.push_back({"random_code", ortho::basis_to_code(ortho::validate(code, q))});
    }

    std::printf("q=%d n=%d threads=%d reps=%d\n", q, n, threads, reps);
    std::printf("%-12s %12s %12s %8s  %s\n", "case", "serial(ms)", "omp(ms)", "speedup", "match");
    for (const Case& c : cases) {
        double t_serial = 0, t_omp = 0;
        std::optional<std::vector<ortho::Component>> r_serial, r_omp;
        for (int rep = 0; rep < reps; ++rep) {
            auto t0 = Clock::now();
            r_serial = (q == 2) ? ortho::serial_ref::decompose_binary(c.code)
                                : ortho::serial_ref::decompose_ternary(c.code);
            t_serial += ms_since(t0);
            t0 = Clock::now();
            r_omp = (q == 2) ? ortho::decompose_binary(c.code, threads)
                             : ortho::decompose_ternary(c.code, threads);
            t_omp += ms_since(t0);
        }
        t_serial /= reps;
        t_omp /= reps;
        const bool ok = same_components(r_serial, r_omp);
        std::printf("%-12s %12.3f %12.3f %8.2f  %s\n", c.name, t_serial, t_omp,
                    t_omp > 0 ? t_serial / t_omp : 0.0, ok ? "yes" : "NO");
        if (!ok) return 1;
    }
    return 0;
}

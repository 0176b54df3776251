#include "flagcw/suites.hpp"
#include "flagcw/flagchow.hpp"
#include "flagcw/parallel.hpp"
#include "flagcw/steenrod.hpp"
#include "flagcw/wdring.hpp"

#include <functional>
#include <stdexcept>

namespace flagcw {

namespace {

using Job = std::function<Check()>;

// Jobs run concurrently; results keep the job order.
std::vector<Check> run_jobs(const std::vector<Job>& jobs)
{
    std::vector<Check> out(jobs.size());
    parallel_for(jobs.size(), [&](size_t i) {
        try {
            out[i] = jobs[i]();
        } catch (const std::exception& e) {
            out[i].pass = false;
            out[i].detail = e.what();
        }
    });
    return out;
}

Check equal(std::string name, const Polynomial& got, const Polynomial& want)
{
    Check c{std::move(name), got == want, {}};
    if (!c.pass) c.detail = "got " + got.to_string() + ", expected " + want.to_string();
    return c;
}

// p(t) -> p(t^4)
Polynomial stretch4(const Polynomial& p)
{
    auto c = t_coefficients(p);
    std::vector<BigInt> out(4 * c.size(), BigInt(0));
    for (size_t i = 0; i < c.size(); ++i) out[4 * i] = c[i];
    return t_poly(out);
}

}  // namespace

bool all_pass(const std::vector<Check>& checks)
{
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::vector<Check> suite_poincare()
{
    const Vars t = t_vars();
    auto poly = [&](const char* s) { return parse_polynomial(s, t); };
    std::vector<Job> jobs;
    jobs.push_back([=] { return equal("chow Fl(1,1,1)", chow_poincare(FlagShape::full(3)), poly("1 + 2*t + 2*t^2 + t^3")); });
    jobs.push_back([=] {
        return equal("chow Fl(1,1,1,1)", chow_poincare(FlagShape::full(4)),
                     poly("1 + 3*t + 5*t^2 + 6*t^3 + 5*t^4 + 3*t^5 + t^6"));
    });
    jobs.push_back([=] { return equal("torsion Fl(3)", torsion_poincare_closed(3, false), poly("2*t^2")); });
    jobs.push_back([=] {
        return equal("torsion Fl(4)", torsion_poincare_closed(4, false), poly("3*t^2 + 2*t^3 + 2*t^4 + 3*t^5"));
    });
    jobs.push_back([=] { return equal("twisted torsion Fl(3)", torsion_poincare_closed(3, true), poly("t + t^2 + t^3")); });
    jobs.push_back([=] {
        return equal("twisted torsion Fl(4)", torsion_poincare_closed(4, true),
                     poly("t + 2*t^2 + 3*t^3 + 3*t^4 + 2*t^5 + t^6"));
    });
    for (const char* s : {"2,2", "2,4", "2,2,2"})
        jobs.push_back([s] {
            FlagShape shape = FlagShape::parse(s);
            return equal(std::string("W ranks of (") + s + ") match the half shape",
                         wd_poincare(shape, TwistClass(shape.blocks(), 0)), stretch4(chow_poincare(shape.half())));
        });
    jobs.push_back([] {
        size_t r = WRing(FlagShape::parse("2,2")).total_rank();
        return Check{"total W rank of (2,2) is 4", r == 4, "got " + std::to_string(r)};
    });
    for (int n = 2; n <= 7; ++n)
        jobs.push_back([n] {
            return equal("W Poincare of Fl(" + std::to_string(n) + ")",
                         wd_poincare(FlagShape::full(n), TwistClass(n, 0)), free_poincare_fln(n));
        });
    return run_jobs(jobs);
}

std::vector<Check> suite_sq2(int max_n)
{
    std::vector<Job> jobs;
    for (int n = 3; n <= max_n; ++n)
        for (const auto& tw : TwistClass::all(n))
            jobs.push_back([n, tw] {
                FlagShape shape = FlagShape::full(n);
                std::string tag = "Fl(" + std::to_string(n) + ") twist " + tw.to_string();
                Sq2Complex c = sq2_complex(ChowRing(shape), tw);
                if (!c.squares_to_zero) return Check{tag + ": Sq2 Sq2 = 0", false, "nonzero composite"};
                std::vector<BigInt> ranks(c.ranks.size() + 1, BigInt(0));
                for (size_t q = 0; q < c.ranks.size(); ++q) ranks[q + 1] = static_cast<unsigned long>(c.ranks[q]);
                Check torsion = equal(tag + ": torsion", t_poly(ranks), torsion_poincare_closed(n, !tw.trivial()));
                if (!torsion.pass) return torsion;
                std::vector<BigInt> b;
                for (size_t x : c.bockstein()) b.push_back(static_cast<unsigned long>(x));
                Check bock = equal(tag + ": Bockstein ranks equal W ranks", t_poly(b), wd_poincare(shape, tw));
                bock.name = tag;
                return bock;
            });
    return run_jobs(jobs);
}

std::vector<Check> suite_piqp(int max_n)
{
    std::vector<Job> jobs;
    for (int n = 2; n <= max_n; ++n) {
        std::string fl = "Fl(" + std::to_string(n) + ")";
        for (int i = 2; i <= n; ++i)
            for (int j = 1; j < i; ++j)
                jobs.push_back([=] {
                    return Check{"(x_[" + std::to_string(i) + "] : x_[" + std::to_string(j) + "]) in " + fl,
                                 piqp_check(n, i, j), "quotient differs"};
                });
        for (int i = 1; i <= n; ++i)
            jobs.push_back([=] {
                size_t got = schubert_ideal_rank(n, i);
                size_t want = static_cast<size_t>(n - i) * factorial(n - 1).get_ui();
                return Check{"rank of (x_[" + std::to_string(i) + "]) in " + fl, got == want,
                             "got " + std::to_string(got) + ", expected " + std::to_string(want)};
            });
    }
    auto out = run_jobs(jobs);
    for (auto& c : out)
        if (c.pass) c.detail.clear();
    return out;
}

std::vector<Check> suite_annihilator()
{
    std::vector<Job> jobs;
    for (const char* s : {"2,2", "1,2", "2,4", "1,2,2", "2,2,2", "1,4"}) {
        FlagShape shape = FlagShape::parse(s);
        for (int b = 1; b <= shape.blocks(); ++b) {
            if (shape.part(b) % 2) continue;
            jobs.push_back([s, b] {
                WRing ring(FlagShape::parse(s));
                AnnihilatorReport r = ann_euler(ring, b);
                Check c{"Ann(e" + std::to_string(b) + ") on (" + s + ") = (" + r.generator_text + ")", r.ok(), {}};
                if (!c.pass)
                    c.detail = "first mismatch in degree " + std::to_string(r.first_mismatch->degree) + " twist " +
                               std::to_string(r.first_mismatch->twist);
                return c;
            });
        }
    }
    for (const char* s : {"1,1", "1,2", "2,2", "1,1,2"}) {
        FlagShape shape = FlagShape::parse(s);
        for (int b = 1; b <= shape.blocks(); ++b)
            jobs.push_back([s, b] {
                return Check{"Ann(c_top(D" + std::to_string(b) + ")) on Fl(" + s + ")",
                             ann_top_chern(FlagShape::parse(s), b), {}};
            });
    }
    return run_jobs(jobs);
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"piqp", "annihilator", "sq2", "poincare"};
    return names;
}

std::vector<Check> run_suite(const std::string& name)
{
    if (name == "piqp") return suite_piqp();
    if (name == "annihilator") return suite_annihilator();
    if (name == "sq2") return suite_sq2();
    if (name == "poincare") return suite_poincare();
    throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace flagcw

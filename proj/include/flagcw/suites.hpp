#pragma once

#include <string>
#include <vector>

namespace flagcw {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;  // observed value on failure
};

bool all_pass(const std::vector<Check>& checks);

// Chow and torsion regressions, W freeness against the half shape, total W ranks.
std::vector<Check> suite_poincare();
// Sq^2 torsion against the closed form, Sq^2 Sq^2 = 0 and Bockstein ranks against W ranks for
// complete flags Fl(3..max_n), every twist.
std::vector<Check> suite_sq2(int max_n = 5);
// Ideal quotients (x_[i] : x_[j]) and ideal ranks of x_[i] in Fl(2..max_n).
std::vector<Check> suite_piqp(int max_n = 5);
// Annihilators of Euler classes in W and of top Chern classes in Chow.
std::vector<Check> suite_annihilator();

// Names accepted by run_suite.
const std::vector<std::string>& suite_names();
std::vector<Check> run_suite(const std::string& name);

}  // namespace flagcw

// Acceptance run: one line per criterion, nonzero exit if any fails.

#include <array>
#include <chrono>
#include <iomanip>
#include <iostream>

#include "brocard/io.hpp"
#include "brocard/verify.hpp"

namespace {

constexpr std::array<const char*, 12> kTitles{
    "center-top loci: areas pi/9, 2 pi/9 and circle of radius 1/3",
    "left-top loci: diagonal symmetry and closed forms",
    "antipodal loci: areas pi/sqrt5, quartics, mirror symmetry",
    "mounted family areas A1, A2 against quadrature",
    "homothetic Brocard loci E1, E2, aspect ratio and tilt",
    "special ratios sqrt5 and 3.8",
    "first Brocard triangle of the homothetic family",
    "homothetic conservation and caustic tangency",
    "circumradius, circle area ratio and Brocard-circle conic",
    "Brocard porism closure, foci, angle and frame",
    "porism observations on derived triangles",
    "equilateral coincidences",
};

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  const brocard::VerificationReport rep = brocard::run_verification();
  const double secs = std::chrono::duration<double>(clock::now() - start).count();

  int failed_criteria = 0;
  for (int k = 1; k <= 12; ++k) {
    int checks = 0;
    std::vector<const brocard::ReportEntry*> bad;
    for (const auto& e : rep.entries()) {
      if (e.criterion != k) continue;
      ++checks;
      if (!e.pass) bad.push_back(&e);
    }
    const bool ok = checks > 0 && bad.empty();
    failed_criteria += ok ? 0 : 1;
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << std::setw(2) << k << ' ' << kTitles[k - 1] << " ("
              << checks - static_cast<int>(bad.size()) << '/' << checks << " checks)\n";
    for (const auto* e : bad) {
      std::cout << "         " << e->id << ": measured " << brocard::format_double(e->measured)
                << ", expected " << brocard::format_double(e->expected) << ", tol "
                << brocard::format_double(e->tol) << "\n";
      if (!e->note.empty()) std::cout << "         " << e->note << "\n";
    }
  }
  std::cout << "suite runtime " << std::fixed << std::setprecision(2) << secs << " s, "
            << 12 - failed_criteria << "/12 criteria pass\n";
  return failed_criteria == 0 ? 0 : 1;
}

#include "rsfield/amplitudes.hpp"

#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "rsfield/rng.hpp"

namespace rsfield {

ModeAmplitudes::ModeAmplitudes(ModeLatticePtr lattice)
    : lattice_(std::move(lattice)), amp_(2 * lattice_->size(), Complex{}) {}

ModeAmplitudes& ModeAmplitudes::operator+=(const ModeAmplitudes& other) {
  if (lattice_.get() != other.lattice_.get()) {
    throw std::invalid_argument("ModeAmplitudes: cannot add states on different lattices");
  }
  for (std::size_t i = 0; i < amp_.size(); ++i) amp_[i] += other.amp_[i];
  return *this;
}

ModeAmplitudes ModeAmplitudes::scaled(Complex factor) const {
  ModeAmplitudes out(lattice_);
  for (std::size_t i = 0; i < amp_.size(); ++i) out.amp_[i] = factor * amp_[i];
  return out;
}

double ModeAmplitudes::max_abs() const {
  double m = 0.0;
  for (const Complex& a : amp_) m = std::max(m, std::abs(a));
  return m;
}

void ModeAmplitudes::save(std::ostream& out) const {
  std::ostringstream line;
  line.precision(17);
  line << std::scientific;
  for (std::size_t i = 0; i < lattice_->size(); ++i) {
    for (int lambda = 1; lambda <= 2; ++lambda) {
      const Complex a = at(i, lambda);
      if (a == Complex{}) continue;
      const auto& n = (*lattice_)[i].n;
      line.str("");
      line << n[0] << ' ' << n[1] << ' ' << n[2] << ' ' << lambda << ' ' << a.real() << ' '
           << a.imag() << '\n';
      out << line.str();
    }
  }
}

ModeAmplitudes ModeAmplitudes::load(std::istream& in, ModeLatticePtr lattice) {
  ModeAmplitudes result(std::move(lattice));
  std::string text;
  int line_number = 0;
  while (std::getline(in, text)) {
    ++line_number;
    if (text.empty() || text[0] == '#') continue;
    std::istringstream line(text);
    std::array<int, 3> n{};
    int lambda = 0;
    double re = 0.0, im = 0.0;
    if (!(line >> n[0] >> n[1] >> n[2] >> lambda >> re >> im)) {
      std::ostringstream msg;
      msg << "ModeAmplitudes: malformed entry at line " << line_number << ": '" << text << "'";
      throw std::invalid_argument(msg.str());
    }
    if (lambda != 1 && lambda != 2) {
      std::ostringstream msg;
      msg << "ModeAmplitudes: polarization index must be 1 or 2 at line " << line_number;
      throw std::invalid_argument(msg.str());
    }
    const auto idx = result.lattice().index_of(n);
    if (!idx) {
      std::ostringstream msg;
      msg << "ModeAmplitudes: wavevector (" << n[0] << ", " << n[1] << ", " << n[2]
          << ") at line " << line_number << " is not on the lattice";
      throw std::invalid_argument(msg.str());
    }
    result.set(*idx, lambda, result.at(*idx, lambda) + Complex(re, im));
  }
  return result;
}

ModeAmplitudes plane_wave(ModeLatticePtr lattice, Vec3 k, int lambda, Complex amplitude) {
  if (lambda != 1 && lambda != 2) {
    throw std::invalid_argument("plane_wave: polarization index must be 1 or 2");
  }
  const double k_unit = lattice->k_unit();
  const std::array<int, 3> snapped{static_cast<int>(std::lround(k.x / k_unit)),
                                   static_cast<int>(std::lround(k.y / k_unit)),
                                   static_cast<int>(std::lround(k.z / k_unit))};
  const Vec3 snapped_k{k_unit * snapped[0], k_unit * snapped[1], k_unit * snapped[2]};
  const bool exact = norm(k - snapped_k) <= 1e-9 * k_unit;
  const auto idx = exact ? lattice->index_of(snapped) : std::nullopt;
  if (!idx) {
    // scan for the closest mode actually on the lattice
    std::size_t best = 0;
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < lattice->size(); ++i) {
      const double dist = norm((*lattice)[i].k - k);
      if (dist < best_dist) {
        best_dist = dist;
        best = i;
      }
    }
    const Mode& mode = (*lattice)[best];
    std::ostringstream msg;
    msg.precision(12);
    msg << "plane_wave: wavevector (" << k.x << ", " << k.y << ", " << k.z
        << ") is not on the lattice; nearest valid wavevector is (" << mode.k.x << ", "
        << mode.k.y << ", " << mode.k.z << ") [n = (" << mode.n[0] << ", " << mode.n[1] << ", "
        << mode.n[2] << ")]";
    throw std::invalid_argument(msg.str());
  }
  ModeAmplitudes result(std::move(lattice));
  result.set(*idx, lambda, amplitude);
  return result;
}

ModeAmplitudes random_amplitudes(ModeLatticePtr lattice, int count, std::uint64_t seed) {
  ModeAmplitudes result(lattice);
  Rng rng(seed);
  const int slots = static_cast<int>(2 * lattice->size());
  count = std::min(count, slots);
  for (int placed = 0; placed < count;) {
    const std::size_t mode = static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(lattice->size()) - 1));
    const int lambda = rng.uniform_int(1, 2);
    if (result.at(mode, lambda) != Complex{}) continue;
    result.set(mode, lambda, rng.unit_disk());
    ++placed;
  }
  return result;
}

}  // namespace rsfield

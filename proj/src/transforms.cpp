#include "rsfield/transforms.hpp"

namespace rsfield {

namespace {

// z * i^m without going through complex multiplication, so that applying a
// transform twice is bitwise equal to applying its square.
inline Complex times_unit(Complex z, int m) {
  switch (m & 3) {
    case 0: return z;
    case 1: return {-z.imag(), z.real()};
    case 2: return {-z.real(), -z.imag()};
    default: return {z.imag(), -z.real()};
  }
}

ComplexVectorField transform_field(const TransformOp& op, const ComplexVectorField& in,
                                   const SpatialGrid& grid, bool time_derivative) {
  const int N = grid.points_per_axis();
  int unit = op.unit_power();
  if (time_derivative && op.inverts_time()) unit = (unit + 2) % 4;  // extra sign from d/dt

  ComplexVectorField out;
  for (int c = 0; c < 3; ++c) out.component[c].resize(grid.point_count());
  for (int ix = 0; ix < N; ++ix) {
    for (int iy = 0; iy < N; ++iy) {
      for (int iz = 0; iz < N; ++iz) {
        const std::size_t dst = grid.flat_index(ix, iy, iz);
        const std::size_t src = op.inverts_space()
                                    ? grid.flat_index((N - ix) % N, (N - iy) % N, (N - iz) % N)
                                    : dst;
        for (int c = 0; c < 3; ++c) {
          Complex z = in.component[c][src];
          if (op.conjugates()) z = std::conj(z);
          out.component[c][dst] = times_unit(z, unit);
        }
      }
    }
  }
  return out;
}

}  // namespace

std::string TransformOp::name() const {
  if (*this == identity()) return "1";
  if (*this == charge_conjugation()) return "C";
  std::string s;
  for (int i = 0; i < d_; ++i) s += 'D';
  if (d_ == 2) s = "C";
  if (p_) s += 'P';
  if (t_) s += 'T';
  return s;
}

TransformOp compose(std::span<const TransformOp> ops) {
  TransformOp result;
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    result = it->then_after(result);  // fold right to left: earlier entries act later
  }
  return result;
}

TransformOp compose(std::initializer_list<TransformOp> ops) {
  return compose(std::span<const TransformOp>(ops.begin(), ops.size()));
}

FieldConfiguration apply(const TransformOp& op, const FieldConfiguration& config) {
  FieldConfiguration out{config.grid, op.inverts_time() ? -config.time : config.time, {}};
  out.F = transform_field(op, config.F, config.grid, false);
  return out;
}

ComplexVectorField apply_to_time_derivative(const TransformOp& op, const ComplexVectorField& dF_dt,
                                            const SpatialGrid& grid) {
  return transform_field(op, dF_dt, grid, true);
}

std::pair<MaxwellResidual, MaxwellResidual> invariance_report(const FieldConfiguration& config,
                                                              const ComplexVectorField& dF_dt,
                                                              const TransformOp& op,
                                                              const UnitSystem& units) {
  const MaxwellResidual before = maxwell_residual(config, dF_dt, units);
  const FieldConfiguration transformed = apply(op, config);
  const ComplexVectorField transformed_dt = apply_to_time_derivative(op, dF_dt, config.grid);
  const MaxwellResidual after = maxwell_residual(transformed, transformed_dt, units);
  return {before, after};
}

}  // namespace rsfield

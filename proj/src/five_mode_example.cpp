#include "qcascade/five_mode_example.hpp"

namespace qcascade {

namespace {

using C = Complex;

}  // namespace

RealizationParams five_mode_example_params() {
  RealizationParams p;
  p.M.resize(5, 5);
  // clang-format off
  p.M << C(3.3314, 0),       C(2.5448, 0.8204),  C(2.4007, 1.1592),  C(3.6470, 1.3066),  C(1.9949, 1.8970),
         C(2.5448, -0.8204), C(3.3994, 0),       C(2.7136, 0.4185),  C(3.7009, -0.1246), C(2.6090, 1.4039),
         C(2.4007, -1.1592), C(2.7136, -0.4185), C(4.1258, 0),       C(4.2612, -0.3611), C(3.5647, 1.0224),
         C(3.6470, -1.3066), C(3.7009, 0.1246),  C(4.2612, 0.3611),  C(5.9568, 0),       C(4.1173, 1.3450),
         C(1.9949, -1.8970), C(2.6090, -1.4039), C(3.5647, -1.0224), C(4.1173, -1.3450), C(3.9970, 0);

  p.Theta.resize(5, 5);
  p.Theta << C(1.8356, 0),       C(2.3408, -0.3287), C(1.8732, 0.0757),  C(1.8750, 0.0488),  C(1.5306, 0.3665),
             C(2.3408, 0.3287),  C(3.9779, 0),       C(3.3007, 0.4982),  C(2.8626, 0.2561),  C(2.3995, 1.1168),
             C(1.8732, -0.0757), C(3.3007, -0.4982), C(3.8582, 0),       C(2.5536, -0.7201), C(3.1242, 0.8781),
             C(1.8750, -0.0488), C(2.8626, -0.2561), C(2.5536, 0.7201),  C(3.0974, 0),       C(1.9480, 0.9779),
             C(1.5306, -0.3665), C(2.3995, -1.1168), C(3.1242, -0.8781), C(1.9480, -0.9779), C(3.0319, 0);

  p.Lambda.resize(2, 5);
  p.Lambda << C(-1.0106, 0.0),    C(0.5077, 1.0950), C(0.5913, 0.4282),  C(0.3803, 0.7310),  C(-0.0195, 0.0403),
              C(0.6145, -0.3179), C(1.6924, -1.8740), C(-0.6436, 0.8956), C(-1.0091, 0.5779), C(-0.0482, 0.6771);
  // clang-format on

  p.S = CMatrix::Identity(2, 2);
  return p;
}

std::vector<Complex> five_mode_example_reported_poles() {
  return {C(-0.0038, -0.0181), C(-0.2103, -0.1040), C(-0.1674, -1.1066),
          C(-3.0388, -0.9275), C(-10.8541, -225.9473)};
}

}  // namespace qcascade

#pragma once

#include <Eigen/Core>

namespace shiftlab::detail {

/// out[k] = sum_j in[j] e^{-2 pi i jk/M}  (unnormalized)
Eigen::VectorXcd fft_forward(const Eigen::VectorXcd& in);

/// out[j] = sum_k in[k] e^{+2 pi i jk/M}  (unnormalized)
Eigen::VectorXcd fft_backward(const Eigen::VectorXcd& in);

}  // namespace shiftlab::detail

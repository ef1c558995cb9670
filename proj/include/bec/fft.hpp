// Copyright 2026 The becgs Project Developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
// implied. See the License for the specific language governing
// permissions and limitations under the License.

#ifndef BEC_FFT_HPP
#define BEC_FFT_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace bec {

/** In-place complex-to-complex transforms for one grid shape.
 *
 * Plans are created once (FFTW, deterministic ESTIMATE planning, unaligned
 * so any buffer works) and only read afterwards, so a single engine may be
 * executed from several threads as long as each call owns its buffer.
 * forward() is unnormalized; backward() scales by 1/N so the pair is the
 * identity. Axis transforms normalize by the axis length. */
class FftEngine {
  public:
    explicit FftEngine(std::vector<std::size_t> shape);
    ~FftEngine();

    FftEngine(const FftEngine&) = delete;
    FftEngine& operator=(const FftEngine&) = delete;

    std::size_t size() const { return total_; }

    void forward(std::complex<double>* data) const;
    void backward(std::complex<double>* data) const;

    /** 1D transforms along one axis of a 2D grid. */
    void forward_axis(int axis, std::complex<double>* data) const;
    void backward_axis(int axis, std::complex<double>* data) const;

  private:
    struct Plans;
    std::vector<std::size_t> shape_;
    std::size_t total_;
    Plans* plans_;
};

} // namespace bec

#endif

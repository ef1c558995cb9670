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

#ifndef BEC_GRID_HPP
#define BEC_GRID_HPP

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace bec {

class FftEngine;

/** One axis of a periodic rectangular domain: the half-open interval
 * [lo, hi) sampled at n equispaced points, n a power of two >= 4. */
struct AxisSpec {
    double lo;
    double hi;
    std::size_t n;
};

/** Immutable periodic pseudospectral grid in 1 or 2 dimensions.
 *
 * Copies share the underlying payload (wavenumber tables and transform
 * plans), so passing grids by value is cheap. Two grids compare equal
 * when their axes agree exactly. */
class SpectralGrid {
  public:
    explicit SpectralGrid(std::vector<AxisSpec> axes);

    static SpectralGrid line(double lo, double hi, std::size_t n);
    static SpectralGrid square(double lo, double hi, std::size_t n);

    int dim() const;
    /** Total number of grid points. */
    std::size_t size() const;
    std::size_t extent(int axis) const;
    double lower(int axis) const;
    double upper(int axis) const;
    /** Grid spacing h_i = (hi - lo) / n_i. */
    double spacing(int axis) const;
    /** Quadrature weight h^d of one cell. */
    double cell_volume() const;
    /** Volume |D| of the domain. */
    double domain_volume() const;
    /** Coordinate of point i along an axis: lo + i * h. */
    double coordinate(int axis, std::size_t i) const;
    /** Wavenumbers 2*pi*m/(hi-lo) in FFT order m = 0..n/2-1, -n/2..-1. */
    std::span<const double> wavenumbers(int axis) const;
    /** |k|^2 per grid point in row-major order (length size()). */
    std::span<const double> wavenumbers_squared() const;

    const FftEngine& fft() const;

    friend bool operator==(const SpectralGrid& a, const SpectralGrid& b);

  private:
    struct Payload;
    std::shared_ptr<const Payload> payload_;
};

/** Complex-valued grid function, row-major storage, immutable by
 * convention: operations take fields by const reference and return new
 * ones. Entries are validated to be finite at construction. */
class WaveField {
  public:
    explicit WaveField(SpectralGrid grid);
    WaveField(SpectralGrid grid, std::vector<std::complex<double>> values);

    const SpectralGrid& grid() const { return grid_; }
    std::size_t size() const { return values_.size(); }
    std::span<const std::complex<double>> values() const { return values_; }
    std::span<std::complex<double>> values() { return values_; }

    /** Sample f(x) (1D) on the grid. */
    template <class F>
    static WaveField sample_line(const SpectralGrid& g, F&& f) {
        WaveField out(g);
        for (std::size_t i = 0; i < g.extent(0); ++i)
            out.values()[i] = f(g.coordinate(0, i));
        return out;
    }

    /** Sample f(x, y) (2D, row-major: x is the slow index) on the grid. */
    template <class F>
    static WaveField sample_plane(const SpectralGrid& g, F&& f) {
        WaveField out(g);
        const std::size_t ny = g.extent(1);
        for (std::size_t i = 0; i < g.extent(0); ++i)
            for (std::size_t j = 0; j < ny; ++j)
                out.values()[i * ny + j] = f(g.coordinate(0, i), g.coordinate(1, j));
        return out;
    }

  private:
    SpectralGrid grid_;
    std::vector<std::complex<double>> values_;
};

/** Real scalar field sampled on a grid (potentials and multiplier tables). */
using RealField = std::vector<double>;

} // namespace bec

#endif

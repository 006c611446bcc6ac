#pragma once

#include <functional>
#include <utility>

#include "qgsw/field.hpp"

namespace qgsw {

/// Smooth dyadic partition of unity on frequency space.
///
/// psi is a radial profile with psi = 1 on [0, 1] and psi = 0 on [4/3, inf);
/// phi(r) = psi(r/2) - psi(r), so the telescoping identity
///   psi(r) + sum_{k=0}^{K} phi(2^-k r) = psi(2^-K-1 r)
/// holds exactly by construction. Band j >= 0 applies phi(2^-j |k|); band
/// j = -1 applies psi(|k|).
class DyadicFamily {
public:
    /// Transition maps [0, 1] -> [1, 0] smoothly and monotonically; it fills
    /// psi on [1, 4/3] via psi(r) = transition(3 (r - 1)).
    explicit DyadicFamily(std::function<double(double)> transition);

    /// Family with the standard C-infinity exp(-1/t) smoothstep transition.
    static DyadicFamily standard();

    double psi(double r) const;
    double phi(double r) const { return psi(0.5 * r) - psi(r); }

    /// Largest j whose band meets the grid's wavenumber lattice.
    int max_band(const Grid& grid) const;

private:
    std::function<double(double)> transition_;
};

/// Delta_j f (j >= -1; j = -1 is the low block psi(D)).
ScalarField band_project(const DyadicFamily& fam, const ScalarField& f, int j);

/// S_j f = psi(2^-j D) f = sum_{j' <= j-1} Delta_j' f.
ScalarField low_project(const DyadicFamily& fam, const ScalarField& f, int j);

struct BesovSpec {
    double s = 0.0;
    double p = 2.0;    // <= 0 means infinity
    double q = 2.0;    // <= 0 means sup over bands
};

/// Inhomogeneous Besov norm over bands j = -1 .. max_band.
double besov_norm(const DyadicFamily& fam, const ScalarField& f, const BesovSpec& spec);

/// Besov norm restricted to bands j >= 0 (homogeneous high-frequency part).
double besov_norm_high(const DyadicFamily& fam, const ScalarField& f, const BesovSpec& spec);

/// Hybrid norm: |S_0 perp-grad Laplace^-1 f|_Lp + high-band Besov tail.
/// r <= 0 means sup over j >= 0. Rejects fields with nonzero mean.
double x_norm(const DyadicFamily& fam, const ScalarField& f, double s = -1.0, double p = 2.0,
              double r = 0.0);

/// Sharp Fourier truncation keeping |k| >= theta.
ScalarField sharp_highpass(const ScalarField& f, double theta);

/// Sharp annulus truncation keeping a <= |k| <= b (requires 0 < a < b).
ScalarField annulus_project(const ScalarField& f, double a, double b);

struct RescaledCutoffs {
    ScalarField low;        // psi(|k| / theta) f
    ScalarField high_root;  // sqrt(1 - psi(|k| / theta)) f
};

RescaledCutoffs rescaled_cutoffs(const DyadicFamily& fam, const ScalarField& f, double theta);

/// [Delta_j, v.grad] f = Delta_j(v.grad f) - v.grad(Delta_j f), with all
/// products dealiased. Rejects v whose spectral divergence exceeds 1e-8.
ScalarField commutator(const DyadicFamily& fam, const VectorField& v, const ScalarField& f,
                       int j);

/// Checks the band-splitting interpolation bound
///   |(Id-S0)f|_{B^s_{p,1}} <= low block + N |(Id-S0)f|_{B^s_{p,inf}}
///       + (sum_{j>=N} 2^{-j eps}) |(Id-S0)f|_{B^{s+eps}_{p,inf}},
/// with the geometric tail evaluated exactly over the finite lattice bands
/// (~ 2^{-N eps} up to the summable constant).
bool log_interpolation_check(const DyadicFamily& fam, const ScalarField& f, double s, double p,
                             double eps, int N);

}  // namespace qgsw

/*
 * Transport of brick sequences and charges across a quiver mutation.
 *
 * The transport matrix B_k is the identity outside row k; row k lists
 * the arrow counts out of k.  Two diagonal conventions at (k, k) are
 * provided:
 *
 *   Projection: entry 0.  Then B_k^2 = B_k; the matrix forgets the k-th
 *       coordinate and cannot be undone.
 *   Reflection: entry -1.  Then B_k^2 = I; this is the variant that
 *       actually transports complete forward hom-orthogonal sequences to
 *       the mutated quiver (the projection variant demonstrably fails;
 *       see tests/test_cross.cpp), so it is the default for rotation.
 *
 * rotate_cfho sends (N_1 = e_k, N_2, ..., N_m) to
 * (B_k N_2, ..., B_k N_m, e_k); rotate_charge sends (alpha, beta) with
 * B_k beta > 0 to (B_k^T alpha, B_k^T beta), re-validating that the new
 * beta is strictly positive.  Note the input beta need not be positive;
 * for the reflection variant the transported beta is positive only when
 * beta_k < 0.
 */

#pragma once

#include "greenwalk/charge.hpp"
#include "greenwalk/walk.hpp"

namespace cluster {

enum class RotationVariant { Projection, Reflection };

struct RotationPreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct FirstBrickNotSimpleAtK : RotationPreconditionError {
    explicit FirstBrickNotSimpleAtK(int k)
        : RotationPreconditionError("first brick is not the simple at vertex " + std::to_string(k))
    {
    }
};
struct NonPositiveImage : RotationPreconditionError {
    explicit NonPositiveImage(size_t index)
        : RotationPreconditionError("transported brick " + std::to_string(index)
                                    + " is not a nonzero non-negative vector"),
          index(index)
    {
    }
    size_t index;
};
struct RotatedBetaNotPositive : RotationPreconditionError {
    using RotationPreconditionError::RotationPreconditionError;
};

IntMatrix rotation_matrix(const Quiver& q, int k, RotationVariant variant);

BrickSeq rotate_cfho(const BrickSeq& bricks, int k, const Quiver& q,
                     RotationVariant variant = RotationVariant::Reflection);

charge::CentralCharge rotate_charge(const ratlin::RatVec& alpha, const ratlin::RatVec& beta,
                                    int k, const Quiver& q,
                                    RotationVariant variant = RotationVariant::Reflection);

} // namespace cluster

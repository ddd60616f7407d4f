#pragma once

#include "contactred/geometry.hpp"
#include "contactred/rng.hpp"

namespace contactred {

/// A named submanifold given by tangent-space samples at points on it,
/// together with the class its construction guarantees.
struct SubmanifoldSamples {
    std::string name;
    SubmanifoldClass expected;
    std::vector<SubspaceBasis> samples;
};

/// Test corpus on the contact chart with n degrees of freedom:
///   zero_section   {p = 0, z = 0}        Legendrian
///   fiber          {q = 0, z = 0}        Legendrian
///   graph          {p = dq f, z = f}     Legendrian (f = |q|^2 / 2)
///   vertical_slab  {p_1 = 0}             Coisotropic (vertical points)
///   zero_level     {z = 0}               Coisotropic
///   isotropic_line span{d/dq^1}, p_1 = 0 Isotropic (n >= 2 only)
std::vector<SubmanifoldSamples> contact_corpus(int n, Rng& rng, int points_per = 20);

/// Symplectic counterpart:
///   zero_section   {p = 0}               Lagrangian
///   graph          {p = dq f}            Lagrangian
///   coisotropic    {p_1 = 0}             Coisotropic (n >= 2)
///   isotropic_line span{d/dq^1}          Isotropic (n >= 2)
///   symplectic_pl  span{d/dq^1, d/dp_1}  symplectic subspace (n >= 2)
std::vector<SubmanifoldSamples> symplectic_corpus(int n, Rng& rng, int points_per = 20);

} // namespace contactred

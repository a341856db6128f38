#pragma once

#include <horikawa/admissibility.hpp>
#include <horikawa/exact.hpp>
#include <horikawa/hirzebruch_systems.hpp>
#include <horikawa/hj_calculus.hpp>
#include <horikawa/horikawa_moduli.hpp>
#include <horikawa/picard_lattice.hpp>
#include <horikawa/poly.hpp>
#include <horikawa/tangent_cohomology.hpp>

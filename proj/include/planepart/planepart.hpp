#pragma once

// Umbrella header.

#include "planepart/aberth.hpp"
#include "planepart/asymptotics.hpp"
#include "planepart/ball.hpp"
#include "planepart/ball_pp.hpp"
#include "planepart/divisor_sums.hpp"
#include "planepart/exact_poly.hpp"
#include "planepart/inequality_lab.hpp"
#include "planepart/int_poly.hpp"
#include "planepart/integers.hpp"
#include "planepart/plane_partitions.hpp"
#include "planepart/poly_family.hpp"
#include "planepart/render.hpp"
#include "planepart/report.hpp"
#include "planepart/serialize.hpp"
#include "planepart/sturm.hpp"
#include "planepart/zero_tables.hpp"

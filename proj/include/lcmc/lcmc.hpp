#pragma once

#include "lcmc/bvp.hpp"
#include "lcmc/core.hpp"
#include "lcmc/error.hpp"
#include "lcmc/figures.hpp"
#include "lcmc/flux.hpp"
#include "lcmc/format.hpp"
#include "lcmc/job_config.hpp"
#include "lcmc/mesh.hpp"
#include "lcmc/minkowski.hpp"
#include "lcmc/oracle.hpp"
#include "lcmc/patch_io.hpp"
#include "lcmc/profile.hpp"
#include "lcmc/quadrature.hpp"

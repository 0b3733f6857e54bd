#pragma once

#include "srlab/catalog.hpp"
#include "srlab/config.hpp"
#include "srlab/domain.hpp"
#include "srlab/errors.hpp"
#include "srlab/field.hpp"
#include "srlab/kernels.hpp"
#include "srlab/moebius.hpp"
#include "srlab/operators.hpp"
#include "srlab/quadrature.hpp"
#include "srlab/quaternion.hpp"
#include "srlab/report.hpp"
#include "srlab/series.hpp"
#include "srlab/slice.hpp"
#include "srlab/structural_set.hpp"
#include "srlab/theorems.hpp"

#pragma once

#include "fusebench/colorspace.hpp"
#include "fusebench/error.hpp"
#include "fusebench/filter.hpp"
#include "fusebench/metrics.hpp"
#include "fusebench/netpbm.hpp"
#include "fusebench/parallel.hpp"
#include "fusebench/pca.hpp"
#include "fusebench/pipeline.hpp"
#include "fusebench/raster.hpp"
#include "fusebench/statistics.hpp"
#include "fusebench/synthetic.hpp"

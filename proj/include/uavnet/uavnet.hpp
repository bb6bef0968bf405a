#pragma once

// Convenience include for the whole library.

#include "uavnet/association.hpp"
#include "uavnet/channel.hpp"
#include "uavnet/config.hpp"
#include "uavnet/ga.hpp"
#include "uavnet/harness.hpp"
#include "uavnet/kmeans.hpp"
#include "uavnet/metrics.hpp"
#include "uavnet/oracle.hpp"
#include "uavnet/rng.hpp"
#include "uavnet/scenario.hpp"
#include "uavnet/types.hpp"

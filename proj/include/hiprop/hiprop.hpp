#ifndef HIPROP_HIPROP_HPP
#define HIPROP_HIPROP_HPP

// Umbrella header: the complete highway beacon-propagation toolkit.

#include "hiprop/analytic.hpp"
#include "hiprop/engine.hpp"
#include "hiprop/errors.hpp"
#include "hiprop/experiments.hpp"
#include "hiprop/mc_oracles.hpp"
#include "hiprop/params.hpp"
#include "hiprop/rng.hpp"
#include "hiprop/snr.hpp"
#include "hiprop/traffic.hpp"
#include "hiprop/validation.hpp"

#endif // HIPROP_HIPROP_HPP

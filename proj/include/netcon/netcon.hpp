// Umbrella header.
#pragma once

#include "netcon/catalog.hpp"
#include "netcon/chain.hpp"
#include "netcon/configuration.hpp"
#include "netcon/core.hpp"
#include "netcon/dsl.hpp"
#include "netcon/engine.hpp"
#include "netcon/experiment.hpp"
#include "netcon/graph.hpp"
#include "netcon/protocol.hpp"
#include "netcon/rng.hpp"
#include "netcon/stability.hpp"

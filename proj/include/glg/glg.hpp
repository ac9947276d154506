#pragma once

#include "glg/bitset.hpp"
#include "glg/engine.hpp"
#include "glg/enumerate.hpp"
#include "glg/experiments.hpp"
#include "glg/features.hpp"
#include "glg/generators.hpp"
#include "glg/graph.hpp"
#include "glg/graph6.hpp"
#include "glg/io.hpp"
#include "glg/iso.hpp"
#include "glg/metric.hpp"
#include "glg/parallel.hpp"
#include "glg/rng.hpp"

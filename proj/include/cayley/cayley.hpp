#pragma once

#include "cayley/bfs.hpp"
#include "cayley/bitsynth.hpp"
#include "cayley/decomp.hpp"
#include "cayley/error.hpp"
#include "cayley/matrix.hpp"
#include "cayley/modring.hpp"
#include "cayley/rowsynth.hpp"
#include "cayley/sampling.hpp"
#include "cayley/stats.hpp"
#include "cayley/synth.hpp"
#include "cayley/word.hpp"
#include "cayley/zeckendorf.hpp"

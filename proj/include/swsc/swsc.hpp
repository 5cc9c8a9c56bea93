#pragma once

// Sliding-window adaptive Shannon coding over large alphabets.

#include "swsc/analysis.hpp"
#include "swsc/bitio.hpp"
#include "swsc/codebook.hpp"
#include "swsc/corpus.hpp"
#include "swsc/dictionary.hpp"
#include "swsc/errors.hpp"
#include "swsc/params.hpp"
#include "swsc/partial_sums.hpp"
#include "swsc/raw_io.hpp"
#include "swsc/sliding_coder.hpp"
#include "swsc/stream.hpp"

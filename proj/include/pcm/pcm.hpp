#pragma once

#include "pcm/axioms.hpp"
#include "pcm/comparison_matrix.hpp"
#include "pcm/error.hpp"
#include "pcm/indices.hpp"
#include "pcm/matrix_io.hpp"
#include "pcm/priority.hpp"
#include "pcm/random.hpp"
#include "pcm/random_index.hpp"

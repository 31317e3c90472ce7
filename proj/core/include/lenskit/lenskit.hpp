#pragma once

#include "lenskit/atf.hpp"
#include "lenskit/bigint.hpp"
#include "lenskit/error.hpp"
#include "lenskit/farey.hpp"
#include "lenskit/handle.hpp"
#include "lenskit/json.hpp"
#include "lenskit/lens.hpp"
#include "lenskit/markov.hpp"
#include "lenskit/mat2.hpp"

#pragma once

#include "concise/basic_set.hpp"
#include "concise/bench.hpp"
#include "concise/datagen.hpp"
#include "concise/error.hpp"
#include "concise/plain_set.hpp"
#include "concise/set_op.hpp"
#include "concise/word.hpp"

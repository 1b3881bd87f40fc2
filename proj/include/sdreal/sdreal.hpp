#pragma once

#include "digit.hpp"
#include "errors.hpp"
#include "heron.hpp"
#include "limit.hpp"
#include "oracle.hpp"
#include "rational.hpp"
#include "render.hpp"
#include "stream.hpp"
#include "transforms.hpp"

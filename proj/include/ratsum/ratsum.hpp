#pragma once

/**
 * @file ratsum.hpp
 * @brief Convenience include for the whole library (persistence and CLI
 *        excluded; include json_io.hpp / cli.hpp for those).
 */

#include "builder.hpp"
#include "certificate.hpp"
#include "cubic.hpp"
#include "cycle.hpp"
#include "errors.hpp"
#include "rat.hpp"
#include "registry.hpp"
#include "three_squares.hpp"
#include "witness.hpp"

#pragma once

// Umbrella header.

#include "idparity/alphabet.hpp"
#include "idparity/checksum.hpp"
#include "idparity/distribution.hpp"
#include "idparity/errors.hpp"
#include "idparity/id_number.hpp"
#include "idparity/oracle.hpp"
#include "idparity/parity.hpp"
#include "idparity/population.hpp"
#include "idparity/schedule.hpp"

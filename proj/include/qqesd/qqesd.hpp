#pragma once

#include "qqesd/analysis.hpp"
#include "qqesd/channels.hpp"
#include "qqesd/closed_form.hpp"
#include "qqesd/discrepancy.hpp"
#include "qqesd/entanglement.hpp"
#include "qqesd/errors.hpp"
#include "qqesd/figures.hpp"
#include "qqesd/io.hpp"
#include "qqesd/linalg.hpp"
#include "qqesd/root_finding.hpp"
#include "qqesd/states.hpp"
#include "qqesd/verify.hpp"

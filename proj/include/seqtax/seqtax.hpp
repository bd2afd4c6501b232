// SPDX-License-Identifier: Apache-2.0
#pragma once

// Everything except the HTTP layer (seqtax/api.hpp), which pulls in cpp-httplib.

#include "seqtax/audit.hpp"
#include "seqtax/builtin_schema.hpp"
#include "seqtax/classification.hpp"
#include "seqtax/classifier.hpp"
#include "seqtax/corpus.hpp"
#include "seqtax/defense.hpp"
#include "seqtax/errors.hpp"
#include "seqtax/evidence.hpp"
#include "seqtax/golden_corpus.hpp"
#include "seqtax/render.hpp"
#include "seqtax/rules.hpp"
#include "seqtax/schema.hpp"
#include "seqtax/session.hpp"
#include "seqtax/wizard.hpp"

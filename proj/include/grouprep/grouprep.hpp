#pragma once

#include "grouprep/abelian.hpp"
#include "grouprep/bijection.hpp"
#include "grouprep/certificate.hpp"
#include "grouprep/closed_forms.hpp"
#include "grouprep/corpus.hpp"
#include "grouprep/element_set.hpp"
#include "grouprep/entropic.hpp"
#include "grouprep/error.hpp"
#include "grouprep/group.hpp"
#include "grouprep/io.hpp"
#include "grouprep/p3.hpp"
#include "grouprep/representability.hpp"
#include "grouprep/subgroups.hpp"
#include "grouprep/repro.hpp"

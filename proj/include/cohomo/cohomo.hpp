#pragma once

#include "cohomo/cochain.hpp"
#include "cohomo/cohomology.hpp"
#include "cohomo/fin_ab_group.hpp"
#include "cohomo/gmodule.hpp"
#include "cohomo/group_table.hpp"
#include "cohomo/residue.hpp"
#include "cohomo/smith.hpp"
#include "cohomo/tate.hpp"
#include "cohomo/transfer.hpp"

# -----------------------------------------------------------------------------
# Copyright ©2019 Arthur Gordon-Wright
#
# This file is part of shortsl2.
#
# shortsl2 is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# shortsl2 is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with shortsl2.  If not, see <https://www.gnu.org/licenses/>.
# -----------------------------------------------------------------------------
from typing import Any, Hashable, Iterator, Optional


class MappingWithInitCheck(dict):
    """A dict that is only initialised when an item is looked up

    Subclasses fill the mapping in :meth:`_init_map`. Lookups of keys that are still missing after initialisation go
    through :meth:`__missing__` as usual, so subclasses can build entries on demand there and store them.
    """

    def __init__(self):
        super().__init__()
        self.__initialised = False

    def _check_init(self):
        """Check whether self has been initialised, if not then initialise"""
        if not self.__initialised:
            self.__initialised = True
            self._init_map()

    def _init_map(self):
        raise NotImplementedError("subclasses should implement init map themselves")

    def get(self, key, default=None):
        # type: (Hashable, Optional[Any]) -> Any
        self._check_init()
        try:
            return self[key]
        except KeyError:
            return default

    def __getitem__(self, key):
        # type: (Hashable) -> Any
        self._check_init()
        return super().__getitem__(key)

    def __contains__(self, key):
        # type: (Hashable) -> bool
        self._check_init()
        return super().__contains__(key)

    def __iter__(self):
        # type: () -> Iterator[Hashable]
        self._check_init()
        return super().__iter__()

    def __len__(self):
        # type: () -> int
        self._check_init()
        return super().__len__()

    def keys(self):
        self._check_init()
        return super().keys()

    def values(self):
        self._check_init()
        return super().values()

    def items(self):
        self._check_init()
        return super().items()

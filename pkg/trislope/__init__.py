from trislope.helpers import VERSION as VERSION

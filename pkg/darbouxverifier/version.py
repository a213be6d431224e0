major = 0
minor = 1
patch = 0
string = "{}.{}.{}".format(major, minor, patch)
